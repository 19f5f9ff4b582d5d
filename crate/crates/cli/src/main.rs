//! `congruent`: one binary with a subcommand per construction. Every command
//! prints exact results plus named checks; the exit code is 0 when all checks
//! pass, 1 on a failed check, 2 on bad usage and 3 on an arithmetic error.

use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use congruent::cassini::{heegner_four, heegner_two, Heegner};
use congruent::conics::{
    conic_ec_points, conic_triangle, intersect_example, intersect_identities, lattice_secondary, twin_hyperbolas,
    twin_identities, Adjoin, ConicInput,
};
use congruent::exact::{parse_int, parse_rat, rat_sqrt, DEFAULT_BUDGET};
use congruent::footprints::{classify, footprint_triangle, t0a_norm, verify_tables, Class, Family, FootprintRow};
use congruent::recurrence::{walk, WalkPath};
use congruent::sequences::{brahmagupta, cheb_family, fib_even_family, fib_identity, fib_odd_family, SeqFamily};
use congruent::tangent::{tangent_chain, MAX_DEPTH};
use congruent::triples::{
    area_identity_check, concordant_solutions, connecting_points, derived_triples, distance_identity, euclid,
};
use congruent::{fermat, recurrence, sequences, suite, trinity};
use congruent::{Check, Curve, Error, Exec, Int, Point, Rat, RatTriangle};

/// Deeper Fermat trees outgrow any sensible output.
const FERMAT_MAX_DEPTH: usize = 8;

#[derive(Parser)]
#[command(name = "congruent", version, about = "Exact constructions and checks for congruent numbers")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Default output format when --json is absent.
    #[arg(long, global = true, env = "CONGRUENT_FORMAT", value_enum, default_value = "text")]
    format: Format,
    /// Trial-division and rho effort for factorizations.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Run on the current thread only.
    #[arg(long, global = true)]
    sequential: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// Euclid triple, derived triangles, identities, EC points, concordant forms.
    Triples {
        #[arg(long, value_parser = int_arg, allow_hyphen_values = true)]
        m: Int,
        #[arg(long, value_parser = int_arg, allow_hyphen_values = true)]
        n: Int,
    },
    /// Trinity vector identities and circle residuals.
    Trinity {
        #[command(subcommand)]
        cmd: TrinityCmd,
    },
    /// Ellipse and hyperbola constructions.
    Conics {
        #[command(subcommand)]
        cmd: ConicsCmd,
    },
    /// Heegner quadruples and their Cassini ovals.
    Cassini {
        #[command(subcommand)]
        cmd: CassiniCmd,
    },
    /// Iterated tangent-line doubling from a starting triangle.
    Tangent {
        #[arg(long, value_parser = int_arg, allow_hyphen_values = true)]
        n: Int,
        #[arg(long, value_parser = rat_arg, allow_hyphen_values = true)]
        a: Rat,
        #[arg(long, value_parser = rat_arg, allow_hyphen_values = true)]
        b: Rat,
        #[arg(long, default_value_t = 3)]
        depth: usize,
    },
    /// Footprint equations and their solution tables.
    Footprints {
        #[command(subcommand)]
        cmd: FootprintsCmd,
    },
    /// Walks of the side recurrence, or the bundled walk table.
    Recur(RecurArgs),
    /// Fibonacci, Chebyshev and Brahmagupta families.
    Seq {
        #[command(subcommand)]
        cmd: SeqCmd,
    },
    /// Tree of triples with square hypotenuse and square leg sum.
    Fermat {
        #[arg(long, default_value_t = 6)]
        depth: usize,
        /// Print only the smallest node with both legs positive.
        #[arg(long)]
        find_smallest: bool,
    },
    /// Every acceptance criterion.
    VerifyAll {
        /// List every check instead of one line per criterion.
        #[arg(long)]
        verbose: bool,
    },
}

#[derive(Subcommand)]
enum TrinityCmd {
    Verify {
        #[arg(long, default_value_t = 4)]
        max_order: usize,
        #[arg(long, default_value_t = 32)]
        samples: usize,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum AdjoinArg {
    None,
    SqrtN,
    Sqrt2n,
    Sqrt2,
}

impl From<AdjoinArg> for Adjoin {
    fn from(a: AdjoinArg) -> Self {
        match a {
            AdjoinArg::None => Adjoin::None,
            AdjoinArg::SqrtN => Adjoin::SqrtN,
            AdjoinArg::Sqrt2n => Adjoin::Sqrt2N,
            AdjoinArg::Sqrt2 => Adjoin::Sqrt2,
        }
    }
}

#[derive(Subcommand)]
enum ConicsCmd {
    /// Triangle and EC points from (N, f1, f2).
    Triangle {
        #[arg(long, value_parser = int_arg, allow_hyphen_values = true)]
        n: Int,
        #[arg(long, value_parser = int_arg, allow_hyphen_values = true)]
        f1: Int,
        /// Integer part u of f2 = u times the adjoined radical.
        #[arg(long, value_parser = int_arg, allow_hyphen_values = true)]
        f2: Int,
        #[arg(long, value_enum, default_value = "none")]
        adjoin: AdjoinArg,
    },
    /// Line-ellipse intersection family at parameter t.
    Intersect {
        #[arg(long, value_parser = rat_arg, allow_hyphen_values = true)]
        t: Rat,
        #[arg(long, value_parser = int_arg, allow_hyphen_values = true, default_value = "1")]
        f: Int,
    },
    /// Secondary lattice points through the (m, n) ellipse.
    Lattice {
        #[arg(long, value_parser = int_arg, allow_hyphen_values = true)]
        m: Int,
        #[arg(long, value_parser = int_arg, allow_hyphen_values = true)]
        n: Int,
        #[arg(long, value_parser = rat_arg, allow_hyphen_values = true)]
        t: Rat,
    },
    /// Twin hyperbolas at parameter t.
    Twin {
        #[arg(long, value_parser = rat_arg, allow_hyphen_values = true)]
        t: Rat,
    },
}

#[derive(Args)]
struct CassiniArgs {
    #[arg(long, value_parser = int_arg, allow_hyphen_values = true)]
    n: Int,
    #[arg(long, value_parser = int_arg, allow_hyphen_values = true)]
    f1: Int,
    /// Integer part u of f2 = u times the adjoined radical.
    #[arg(long, value_parser = int_arg, allow_hyphen_values = true)]
    f2: Int,
    #[arg(long, value_enum, default_value = "none")]
    adjoin: AdjoinArg,
    /// Dump sampled oval points for plotting.
    #[arg(long)]
    emit_curve: bool,
    #[arg(long, default_value_t = 64)]
    samples: usize,
}

#[derive(Subcommand)]
enum CassiniCmd {
    /// Two X-axis intersections.
    Two(CassiniArgs),
    /// Four X-axis intersections.
    Four(CassiniArgs),
}

#[derive(Subcommand)]
enum FootprintsCmd {
    /// Rebuild every row of the bundled tables.
    Verify {
        /// One of 0, I, II, III, IV.
        #[arg(long, value_parser = family_arg)]
        table: Option<Family>,
    },
    /// Triangle for one (N, m, n) solution.
    Triangle {
        #[arg(long, value_parser = int_arg)]
        n: Int,
        #[arg(long, value_parser = int_arg, allow_hyphen_values = true)]
        m: Int,
        #[arg(long, value_parser = int_arg, allow_hyphen_values = true)]
        k: Int,
        /// T0a, T0b, TI, TII, TIII or TIV; inferred from N when absent.
        #[arg(long, value_parser = class_arg)]
        class: Option<Class>,
    },
}

#[derive(Args)]
#[command(args_conflicts_with_subcommands = true)]
struct RecurArgs {
    #[command(subcommand)]
    cmd: Option<RecurCmd>,
    #[arg(long, value_parser = int_arg)]
    start_m: Option<Int>,
    #[arg(long, value_parser = int_arg)]
    start_n: Option<Int>,
    /// Sides to pick, e.g. abba; "-" for none.
    #[arg(long, value_parser = path_arg)]
    path: Option<WalkPath>,
}

#[derive(Subcommand)]
enum RecurCmd {
    /// Reproduce the bundled walk table.
    TableCheck,
}

#[derive(Subcommand)]
enum SeqCmd {
    /// Fibonacci/Lucas family; even index by default.
    Fib {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        odd: bool,
    },
    /// Chebyshev family N_{m,k}.
    Cheb {
        #[arg(long)]
        m: u64,
        #[arg(long, value_parser = int_arg)]
        k: Int,
    },
    /// Brahmagupta triangle (t-1, t, t+1), t = 2 T_k(2).
    Brahmagupta {
        #[arg(long)]
        k: u64,
    },
}

fn int_arg(s: &str) -> Result<Int, Error> {
    parse_int(s)
}

fn rat_arg(s: &str) -> Result<Rat, Error> {
    parse_rat(s)
}

fn family_arg(s: &str) -> Result<Family, Error> {
    Family::from_table_name(s)
}

fn class_arg(s: &str) -> Result<Class, Error> {
    s.parse()
}

fn path_arg(s: &str) -> Result<WalkPath, Error> {
    s.parse()
}

/// Command echo, inputs, exact results and checks; rendered as text or JSON.
struct Envelope {
    command: String,
    inputs: Vec<(String, Value)>,
    results: Vec<(String, Value)>,
    checks: Vec<Check>,
    /// Floating-point output, always labelled as approximate.
    approximate: Vec<(String, Value)>,
}

impl Envelope {
    fn new(command: impl Into<String>) -> Self {
        Envelope {
            command: command.into(),
            inputs: Vec::new(),
            results: Vec::new(),
            checks: Vec::new(),
            approximate: Vec::new(),
        }
    }

    fn input(&mut self, k: &str, v: impl Into<Value>) -> &mut Self {
        self.inputs.push((k.into(), v.into()));
        self
    }

    fn result(&mut self, k: impl Into<String>, v: impl Into<Value>) -> &mut Self {
        self.results.push((k.into(), v.into()));
        self
    }

    fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    fn to_json(&self) -> Value {
        let obj = |kv: &[(String, Value)]| Value::Object(kv.iter().cloned().collect::<Map<_, _>>());
        let checks: Vec<Value> =
            self.checks.iter().map(|c| json!({"name": c.name, "pass": c.pass, "detail": c.detail})).collect();
        let mut v = json!({
            "command": self.command,
            "inputs": obj(&self.inputs),
            "results": obj(&self.results),
            "checks": checks,
            "pass": self.pass(),
        });
        if !self.approximate.is_empty() {
            v["approximate"] = obj(&self.approximate);
        }
        v
    }

    fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.command);
        for (title, kv) in [("inputs", &self.inputs), ("results", &self.results), ("approximate", &self.approximate)] {
            if kv.is_empty() {
                continue;
            }
            out.push_str(&format!("{title}:\n"));
            let w = kv.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
            for (k, v) in kv {
                out.push_str(&format!("  {k:<w$}  {}\n", flat(v)));
            }
        }
        if !self.checks.is_empty() {
            out.push_str("checks:\n");
            for c in &self.checks {
                out.push_str(&format!("  {c}\n"));
            }
            let ok = self.checks.iter().filter(|c| c.pass).count();
            out.push_str(&format!("{ok}/{} checks pass\n", self.checks.len()));
        }
        out
    }
}

/// Compact one-line rendering: strings bare, arrays as tuples.
fn flat(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(xs) => format!("({})", xs.iter().map(flat).collect::<Vec<_>>().join(", ")),
        Value::Object(m) => {
            let parts: Vec<String> = m.iter().map(|(k, v)| format!("{k}={}", flat(v))).collect();
            format!("{{{}}}", parts.join(", "))
        }
        other => other.to_string(),
    }
}

fn s(v: &impl ToString) -> Value {
    Value::String(v.to_string())
}

fn tri(t: &RatTriangle) -> Value {
    json!([s(&t.a), s(&t.b), s(&t.c)])
}

fn pt(p: &Point) -> Value {
    match (p.x(), p.y()) {
        (Some(x), Some(y)) => json!([s(x), s(y)]),
        _ => s(&"O"),
    }
}

/// "+-r" when the square root is rational, else "+-sqrt(v)".
fn root(v: &Rat) -> Value {
    match rat_sqrt(v) {
        Some(r) => s(&format!("+-{r}")),
        None => s(&format!("+-sqrt({v})")),
    }
}

fn opt_rat(v: Option<Rat>) -> Value {
    v.map_or(Value::Null, |r| s(&r))
}

type Run = Result<Envelope, Error>;

fn triples(m: &Int, n: &Int) -> Run {
    let mut e = Envelope::new("triples");
    e.input("m", s(m)).input("n", s(n));
    let t = euclid(m, n)?;
    e.result("triple", json!([s(&t.a), s(&t.b), s(&t.c)]));
    e.result("area", s(&t.area()));
    let d = derived_triples(m, n)?;
    let id = area_identity_check(m, n)?;
    let q = &id.quad;
    let named = [("ac", &d.ac, &q.n_ac), ("bc", &d.bc, &q.n_bc), ("ba", &d.ba, &q.n_ba)];
    for (k, tr, area) in named {
        e.result(format!("triangle_{k}"), tri(tr));
        e.result(format!("area_{k}"), s(area));
        e.checks.push(Check::new(
            format!("{k} triangle is right with area {area}"),
            tr.check(&Rat::from_integer(area.clone())),
        ));
    }
    e.result("area_identity", json!([s(&id.lhs), s(&id.rhs)]));
    e.checks.push(Check::with(
        format!("{}^2 + {}^2 + {}^2 = 6(C^4 - 4N^2)", q.n_ac, q.n_bc, q.n_ba),
        id.holds(),
        id.lhs.to_string(),
    ));
    let c = connecting_points(m, n)?;
    for (k, (curve, p)) in ["ac", "bc", "ba"].iter().zip(c.all()) {
        e.result(format!("point_{k}"), pt(p));
        e.checks.push(Check::new(format!("point_{k} on its curve"), curve.on_curve(p)));
    }
    for (k, sol) in ["ac", "bc", "ba"].iter().zip(concordant_solutions(m, n)?) {
        e.result(format!("concordant_{k}"), json!([s(&sol.x), s(&sol.y), s(&sol.z), s(&sol.t), s(&sol.n)]));
        e.checks.push(Check::new(format!("concordant_{k}: x^2 + Ny^2 and x^2 - Ny^2 square"), sol.holds()));
    }
    let r = distance_identity(m, n)?;
    e.result("distance", s(&r.l));
    e.result("distance_quad", json!(r.quad.iter().map(s).collect::<Vec<_>>()));
    e.checks.push(Check::new("distance: sum of squares", r.sum_sq_ok));
    e.checks.push(Check::new("distance: linear sum", r.sum_ok));
    e.checks.push(Check::new("distance: pair relation", r.pair_ok));
    e.checks.push(Check::new("distance: products are squares", r.products_square));
    Ok(e)
}

fn trinity_verify(max_order: usize, samples: usize, exec: Exec) -> Run {
    let mut e = Envelope::new("trinity verify");
    e.input("max_order", max_order).input("samples", samples);
    let (checks, circles) = trinity::verify(max_order, samples, exec);
    e.checks = checks;
    for c in circles {
        let key = format!("{:?}", c.circle);
        e.approximate.push((
            key.clone(),
            json!({"max_residual_approx": c.max_residual, "tolerance": c.tolerance, "samples": c.samples, "variants": c.variants}),
        ));
        e.checks.push(Check::with(
            format!("circle {key} residual below tolerance (approximate)"),
            c.pass(),
            format!("{:.3e}", c.max_residual),
        ));
    }
    Ok(e)
}

fn conics(cmd: &ConicsCmd) -> Run {
    match cmd {
        ConicsCmd::Triangle { n, f1, f2, adjoin } => {
            let mut e = Envelope::new("conics triangle");
            e.input("n", s(n)).input("f1", s(f1)).input("f2", s(f2));
            let inp = ConicInput::adjoined(n, f1.clone(), f2, (*adjoin).into());
            let t = conic_triangle(&inp)?;
            let (p1, p2) = conic_ec_points(&inp)?;
            let curve = Curve::congruent(&inp.n)?;
            e.result("triangle", tri(&t)).result("p1", pt(&p1)).result("p2", pt(&p2));
            e.checks.push(Check::new("triangle is right with area N", t.check(&inp.n)));
            for (k, p) in [("p1", &p1), ("p2", &p2)] {
                e.checks.push(Check::new(format!("{k} on E_N"), curve.on_curve(p)));
                e.checks.push(Check::new(format!("{k} of infinite order"), curve.certify_infinite_order(p)));
            }
            Ok(e)
        }
        ConicsCmd::Intersect { t, f } => {
            let mut e = Envelope::new("conics intersect");
            e.input("t", s(t)).input("f", s(f));
            let r = intersect_example(t, f)?;
            e.result("n", s(&r.n)).result("x", s(&r.x_t)).result("e", s(&r.e_t));
            e.result("triangle", tri(&r.triangle)).result("p1", pt(&r.p1)).result("p2", pt(&r.p2));
            let curve = Curve::congruent(&r.n)?;
            e.checks.push(Check::new("triangle is right with area N", r.triangle.check(&r.n)));
            e.checks.push(Check::new("p1 on E_N", curve.on_curve(&r.p1)));
            e.checks.push(Check::new("p2 on E_N", curve.on_curve(&r.p2)));
            e.checks.push(Check::new(
                "conic points agree up to sign",
                r.conic_p1.eq_up_to_sign(&r.p1) && r.conic_p2.eq_up_to_sign(&r.p2),
            ));
            e.checks.extend(intersect_identities());
            Ok(e)
        }
        ConicsCmd::Lattice { m, n, t } => {
            let mut e = Envelope::new("conics lattice");
            e.input("m", s(m)).input("n", s(n)).input("t", s(t));
            for (i, sec) in lattice_secondary(m, n, t)?.iter().enumerate() {
                let k = i + 1;
                e.result(format!("n{k}"), s(&sec.n));
                e.result(format!("slope{k}"), s(&sec.slope));
                e.result(format!("triangle{k}"), tri(&sec.triangle));
                e.checks.push(Check::new(format!("secondary {k}: area N"), sec.triangle.check(&sec.n)));
                e.checks.push(Check::eq(format!("secondary {k}: N from closed form"), &sec.n, &sec.n_formula));
            }
            Ok(e)
        }
        ConicsCmd::Twin { t } => {
            let mut e = Envelope::new("conics twin");
            e.input("t", s(t));
            let tw = twin_hyperbolas(t)?;
            e.result("n1", s(&tw.n1)).result("n2", s(&tw.n2));
            e.result("triangle1", tri(&tw.tri1)).result("triangle2", tri(&tw.tri2));
            e.checks.push(Check::new("triangle1 area N1", tw.tri1.check(&tw.n1)));
            e.checks.push(Check::new("triangle2 area N2", tw.tri2.check(&tw.n2)));
            e.checks.extend(twin_identities());
            Ok(e)
        }
    }
}

fn cassini(cmd: &CassiniCmd) -> Run {
    let (name, a, four) = match cmd {
        CassiniCmd::Two(a) => ("cassini two", a, false),
        CassiniCmd::Four(a) => ("cassini four", a, true),
    };
    let mut e = Envelope::new(name);
    e.input("n", s(&a.n)).input("f1", s(&a.f1)).input("f2", s(&a.f2));
    let f2sq = Adjoin::from(a.adjoin).square(&a.f2, &a.n);
    let h: Heegner = if four { heegner_four(&a.n, &a.f1, &f2sq)? } else { heegner_two(&a.n, &a.f1, &f2sq)? };
    let q = &h.quad;
    e.result("c1", opt_rat(q.c1())).result("c2", s(&q.c2)).result("c3", opt_rat(q.c3())).result("c4", opt_rat(q.c4()));
    e.result("c1_sq", s(&q.c1sq)).result("c3_sq", s(&q.c3sq)).result("c4_sq", s(&q.c4sq));
    e.result("triangle", tri(&h.triangle));
    e.result("oval", json!({"a2": s(&h.oval.a2), "b4": s(&h.oval.b4), "k": h.oval.k}));
    e.result("form", s(&format!("{:?}", h.axis.form)));
    e.result("x_sq", json!(h.axis.x_sq.iter().map(s).collect::<Vec<_>>()));
    e.result("y_sq", json!(h.axis.y_sq.iter().map(s).collect::<Vec<_>>()));
    e.result("x_axis", json!(h.axis.x_sq.iter().map(root).collect::<Vec<_>>()));
    e.result("y_axis", json!(h.axis.y_sq.iter().map(root).collect::<Vec<_>>()));
    let nn = Rat::from_integer(a.n.clone());
    let zero = Rat::from_integer(Int::from(0));
    e.checks.push(Check::new("triangle is right with area N", h.triangle.check(&nn)));
    for x in &h.axis.x_sq {
        e.checks.push(Check::new(format!("x^2 = {x} on the oval"), h.oval.residual(x, &zero) == zero));
    }
    for y in &h.axis.y_sq {
        e.checks.push(Check::new(format!("y^2 = {y} on the oval"), h.oval.residual(&zero, y) == zero));
    }
    if a.emit_curve {
        let pts: Vec<Value> = h.oval.sample(a.samples).into_iter().map(|(x, y)| json!([x, y])).collect();
        e.approximate.push(("curve_points".into(), Value::Array(pts)));
    }
    Ok(e)
}

fn tangent(n: &Int, a: &Rat, b: &Rat, depth: usize) -> Run {
    let mut e = Envelope::new("tangent");
    e.input("n", s(n)).input("a", s(a)).input("b", s(b)).input("depth", depth);
    if depth == 0 || depth > MAX_DEPTH {
        return Err(Error::Domain(format!("depth must be 1..={MAX_DEPTH}")));
    }
    let start = RatTriangle::from_legs(a.clone(), b.clone())
        .ok_or_else(|| Error::NotSquare(format!("a^2 + b^2 for legs {a}, {b}")))?;
    let ch = tangent_chain(&start, n, depth)?;
    e.result("start_point", pt(&ch.start_point));
    for (i, en) in ch.entries.iter().enumerate() {
        let k = i + 1;
        e.result(format!("s{k}"), json!([s(&en.f1), s(&en.f2)]));
        e.result(format!("triangle{k}"), tri(&en.triangle));
        e.result(format!("point{k}"), pt(&en.point));
    }
    e.checks = ch.checks()?;
    Ok(e)
}

/// The class a bare (N, m, n) belongs to.
fn infer_class(n: &Int, m: &Int, k: &Int) -> Result<Class, Error> {
    Ok(match classify(n)? {
        Family::T0 if &t0a_norm(m, k) == n => Class::T0a,
        Family::T0 => Class::T0b,
        Family::TI => Class::TI,
        Family::TII => Class::TII,
        Family::TIII => Class::TIII,
        Family::TIV => Class::TIV,
    })
}

fn footprints(cmd: &FootprintsCmd, exec: Exec) -> Run {
    match cmd {
        FootprintsCmd::Verify { table } => {
            let mut e = Envelope::new("footprints verify");
            e.input("table", table.map_or(Value::Null, |f| s(&f.table_name())));
            let reports = verify_tables(*table, exec);
            e.result("rows", reports.len());
            for r in reports {
                let detail = match (&r.triangle, &r.error) {
                    (Some(t), _) => t.to_string(),
                    (_, Some(err)) => err.clone(),
                    _ => String::new(),
                };
                let detail = if r.class_ok { detail } else { format!("class mismatch; {detail}") };
                e.checks.push(Check::with(r.row.to_string(), r.pass(), detail));
            }
            Ok(e)
        }
        FootprintsCmd::Triangle { n, m, k, class } => {
            let mut e = Envelope::new("footprints triangle");
            e.input("n", s(n)).input("m", s(m)).input("k", s(k));
            let class = match class {
                Some(c) => *c,
                None => infer_class(n, m, k)?,
            };
            e.result("class", s(&class));
            let row = FootprintRow { n: n.clone(), m: m.clone(), k: k.clone(), class };
            let t = footprint_triangle(&row)?;
            e.result("triangle", tri(&t));
            e.checks.push(Check::new("triangle is right with area N", t.check(&Rat::from_integer(n.clone()))));
            let fam = classify(n).map(|f| f == class.family()).unwrap_or(false);
            e.checks.push(Check::new(format!("class {class} matches N mod 8"), fam));
            Ok(e)
        }
    }
}

fn recur(a: &RecurArgs, exec: Exec) -> Run {
    if let Some(RecurCmd::TableCheck) = a.cmd {
        let mut e = Envelope::new("recur table-check");
        e.checks = recurrence::table_check(exec);
        e.result("cells", e.checks.len());
        return Ok(e);
    }
    let (Some(m), Some(n), Some(path)) = (&a.start_m, &a.start_n, &a.path) else {
        Cli::command()
            .error(ErrorKind::MissingRequiredArgument, "recur needs --start-m, --start-n and --path, or table-check")
            .exit();
    };
    let mut e = Envelope::new("recur");
    e.input("start_m", s(m)).input("start_n", s(n)).input("path", s(path));
    let t = euclid(m, n)?;
    let (n0, t0) = (t.area(), t.to_triangle());
    e.result("n0", s(&n0)).result("triangle0", tri(&t0));
    e.checks.push(Check::new("start triangle has area N", t0.check(&Rat::from_integer(n0.clone()))));
    for (i, (nn, tr)) in walk(&t0, &n0, path)?.iter().enumerate() {
        let k = i + 1;
        e.result(format!("n{k}"), s(nn)).result(format!("triangle{k}"), tri(tr));
        e.checks.push(Check::new(format!("step {k}: right with area {nn}"), tr.check(&Rat::from_integer(nn.clone()))));
    }
    Ok(e)
}

fn family_results(e: &mut Envelope, f: &SeqFamily) -> Result<(), Error> {
    e.result("n_value", s(&f.n)).result("triangle", tri(&f.triangle));
    if let Some(p0) = &f.p0 {
        e.result("p0", pt(p0));
    }
    e.result("p1", pt(&f.p1)).result("p2", pt(&f.p2));
    e.checks.extend(f.checks()?);
    Ok(())
}

fn seq(cmd: &SeqCmd, budget: u64) -> Run {
    match cmd {
        SeqCmd::Fib { n, odd } => {
            let mut e = Envelope::new("seq fib");
            e.input("n", *n).input("odd", *odd);
            let f = if *odd { fib_odd_family(*n)? } else { fib_even_family(*n)? };
            family_results(&mut e, &f)?;
            let (d, t) = f.reduced(budget)?;
            e.result("squarefree", s(&d)).result("reduced_triangle", tri(&t));
            e.checks.push(Check::new("reduced triangle has squarefree area", t.check(&Rat::from_integer(d))));
            let idx = if *odd { 2 * n + 1 } else { 2 * n };
            e.checks.push(Check::new(format!("L^2 - 5F^2 = 4(-1)^n at n={idx}"), fib_identity(idx)));
            Ok(e)
        }
        SeqCmd::Cheb { m, k } => {
            let mut e = Envelope::new("seq cheb");
            e.input("m", *m).input("k", s(k));
            let f = cheb_family(*m, k)?;
            family_results(&mut e, &f)?;
            e.checks.extend(sequences::pell_identity_symbolic(*m as usize));
            Ok(e)
        }
        SeqCmd::Brahmagupta { k } => {
            let mut e = Envelope::new("seq brahmagupta");
            e.input("k", *k);
            let b = brahmagupta(*k)?;
            e.result("sides", json!(b.sides.iter().map(s).collect::<Vec<_>>()));
            e.result("area", s(&b.area)).result("half_perimeter", s(&b.perimeter_half));
            for (i, p) in b.q.iter().enumerate() {
                e.result(format!("q{i}"), pt(p));
            }
            e.checks.extend(b.checks()?);
            Ok(e)
        }
    }
}

fn node_json(label: &str, n: &fermat::FermatNode) -> Value {
    json!({
        "label": label,
        "kind": format!("{:?}", n.kind),
        "depth": n.depth,
        "x": s(&n.x),
        "a": s(&n.a),
        "b": s(&n.b),
        "c": s(&n.c),
        "c_digits": n.c.to_string().len(),
        "sqrt_a_plus_b": s(&n.sum_root),
        "sqrt_c": s(&n.c_root),
    })
}

fn fermat_cmd(depth: usize, find_smallest: bool, exec: Exec) -> Run {
    let mut e = Envelope::new("fermat");
    e.input("depth", depth).input("find_smallest", find_smallest);
    if depth > FERMAT_MAX_DEPTH {
        return Err(Error::Domain(format!("depth above {FERMAT_MAX_DEPTH}")));
    }
    let tree = fermat::enumerate(depth)?;
    e.result("nodes", tree.nodes.len());
    let labelled = tree.labelled();
    if find_smallest {
        let p = tree.smallest_sum().ok_or_else(|| Error::Domain("no all-positive node at this depth".into()))?;
        let label = labelled.iter().find(|(_, n)| std::ptr::eq(*n, p)).map_or("P1", |(l, _)| l.as_str());
        e.result("smallest", node_json(label, p));
        e.checks.extend(fermat::node_checks(p));
    } else {
        let root = &tree.nodes[0];
        let mut list = vec![node_json("root", root)];
        list.extend(labelled.iter().map(|(l, n)| node_json(l, n)));
        e.result("tree", Value::Array(list));
        e.checks.extend(tree.verify(exec));
        e.checks.extend(fermat::table_check(&tree).into_iter().filter(|c| c.detail != "not reached at this depth"));
    }
    Ok(e)
}

fn verify_all(verbose: bool, exec: Exec) -> Run {
    let mut e = Envelope::new("verify-all");
    for c in suite::verify_all(exec) {
        let ok = c.checks.iter().filter(|k| k.pass).count();
        e.result(format!("criterion {:02}", c.id), s(&format!("{} ({ok}/{})", c.title, c.checks.len())));
        if verbose {
            e.checks.extend(c.checks.iter().map(|k| Check { name: format!("C{} {}", c.id, k.name), ..k.clone() }));
        } else {
            let bad: Vec<String> = c.checks.iter().filter(|k| !k.pass).map(|k| k.to_string()).collect();
            e.checks.push(Check::with(format!("criterion {}: {}", c.id, c.title), c.pass(), bad.join("; ")));
        }
    }
    Ok(e)
}

fn dispatch(cli: &Cli) -> Run {
    let exec = if cli.sequential { Exec::Sequential } else { Exec::default() };
    match &cli.cmd {
        Cmd::Triples { m, n } => triples(m, n),
        Cmd::Trinity { cmd: TrinityCmd::Verify { max_order, samples } } => trinity_verify(*max_order, *samples, exec),
        Cmd::Conics { cmd } => conics(cmd),
        Cmd::Cassini { cmd } => cassini(cmd),
        Cmd::Tangent { n, a, b, depth } => tangent(n, a, b, *depth),
        Cmd::Footprints { cmd } => footprints(cmd, exec),
        Cmd::Recur(a) => recur(a, exec),
        Cmd::Seq { cmd } => seq(cmd, cli.budget),
        Cmd::Fermat { depth, find_smallest } => fermat_cmd(*depth, *find_smallest, exec),
        Cmd::VerifyAll { verbose } => verify_all(*verbose, exec),
    }
}

/// Writes to stdout, ignoring a closed pipe.
fn emit(text: &str) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(text.as_bytes()).and_then(|_| out.flush());
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(err) => {
            let _ = err.print();
            return ExitCode::from(if err.use_stderr() { 2 } else { 0 });
        }
    };
    let json = cli.json || cli.format == Format::Json;
    match dispatch(&cli) {
        Ok(env) => {
            let text = if json { format!("{}\n", env.to_json()) } else { env.to_text() };
            emit(&text);
            ExitCode::from(if env.pass() { 0 } else { 1 })
        }
        Err(err) => {
            if json {
                let cmd = std::env::args().nth(1).unwrap_or_default();
                emit(&format!("{}\n", json!({"command": cmd, "error": err.to_string(), "pass": false})));
            }
            eprintln!("error: {err}");
            ExitCode::from(3)
        }
    }
}
