use serde_json::{json, Value};

use crate::cohomology::{
    classify_extensions, cohomology_space, obstruction_class, CohomologyError, GModule,
};
use crate::extensions::{
    build_extension, check_equivalence_witness, check_split_witness, pullback_extension,
    solve_split_abelian, transform_datum, ExtensionDatum, ExtensionError, ExtensionTriple,
};
use crate::gvs::{GradedLinearMap, Parity, SuperVectorSpace};
use crate::superlie::SuperLieAlgebra;

use super::files::{
    algebra_file, datum_file, extension_file, load_algebra, load_datum, load_extension, load_map,
    load_module, map_file, read_json, to_json, AlgebraFile, Ctx, DatumFile, ExtensionFile, MapFile,
    ModuleFile,
};
use super::render::{
    cochain_json, cochain_lines, combo, datum_json, datum_lines, ok, operator, rows, strings, tuple_names,
    Report,
};
use super::{CliError, Command, Options, Triple, MAX_DIM};

fn failed(e: impl std::fmt::Display) -> CliError {
    CliError::Failed(e.to_string())
}

fn cohomology_failed(e: CohomologyError) -> CliError {
    match e {
        CohomologyError::ArityCap { .. } => CliError::Guard(format!("{e}; pass --allow-large to lift it")),
        other => failed(other),
    }
}

fn guard_dim(opts: Options, what: &str, dim: usize) -> Result<(), CliError> {
    if dim > MAX_DIM && !opts.allow_large {
        return Err(CliError::Guard(format!(
            "{what} has dimension {dim} > {MAX_DIM}; pass --allow-large to proceed"
        )));
    }
    Ok(())
}

fn dims(space: &SuperVectorSpace) -> String {
    format!("({}|{})", space.dim_even(), space.dim_odd())
}

fn algebra(path: &str, opts: Options) -> Result<SuperLieAlgebra, CliError> {
    let file: AlgebraFile = read_json(path)?;
    let alg = load_algebra(&Ctx::new(path), &file)?;
    guard_dim(opts, path, alg.dim())?;
    Ok(alg)
}

fn require_valid(path: &str, field: &str, alg: &SuperLieAlgebra) -> Result<(), CliError> {
    if alg.validate().passed() {
        Ok(())
    } else {
        Err(Ctx::new(path)
            .at(field)
            .invariant(format!("`{}` is not a super Lie algebra (run `validate`)", alg.name())))
    }
}

fn valid_algebra(path: &str, opts: Options) -> Result<SuperLieAlgebra, CliError> {
    let alg = algebra(path, opts)?;
    require_valid(path, "brackets", &alg)?;
    Ok(alg)
}

fn datum(path: &str, opts: Options) -> Result<ExtensionDatum, CliError> {
    let file: DatumFile = read_json(path)?;
    let d = load_datum(&Ctx::new(path), &file)?;
    guard_dim(opts, path, d.g().dim() + d.h().dim())?;
    require_valid(path, "g", d.g())?;
    require_valid(path, "h", d.h())?;
    Ok(d)
}

fn witness(path: &str, d: &ExtensionDatum) -> Result<GradedLinearMap, CliError> {
    let file: MapFile = read_json(path)?;
    load_map(
        &Ctx::new(path),
        &file,
        (d.g().name(), d.g().space()),
        (d.h().name(), d.h().space()),
    )
}

fn bracket_lines(alg: &SuperLieAlgebra, indent: &str) -> Vec<String> {
    let n = alg.dim();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i..n {
            let v = alg.bracket_basis(i, j);
            if !crate::gvs::is_zero_vector(v) {
                out.push(format!(
                    "{indent}[{}, {}] = {}",
                    alg.space().name(i),
                    alg.space().name(j),
                    combo(alg.space(), v)
                ));
            }
        }
    }
    if out.is_empty() {
        out.push(format!("{indent}abelian"));
    }
    out
}

fn write_file(path: &str, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|e| CliError::Io {
        path: path.to_string(),
        msg: e.to_string(),
    })
}

pub(super) fn dispatch(command: &Command, opts: Options) -> Result<Report, CliError> {
    match command {
        Command::Validate { algebra: path } => validate(path, opts),
        Command::Center { algebra: path } => center(path, opts),
        Command::Derivations { algebra: path } => derivations(path, opts),
        Command::Out { algebra: path } => out(path, opts),
        Command::Cohomology { algebra: path, degree, module } => {
            cohomology(path, *degree, module.as_deref(), opts)
        }
        Command::SectionData { extension, section } => section_data(extension, section, opts),
        Command::CheckData { datum: path } => check_data(path, opts),
        Command::Build { datum: path, output } => build(path, output.as_deref(), opts),
        Command::Transform { datum: path, witness: w, output } => transform(path, w, output.as_deref(), opts),
        Command::Equivalent { datum: path, other, witness: w } => equivalent(path, other, w, opts),
        Command::SplitCheck { datum: path, witness: w, solve_abelian } => {
            split_check(path, w.as_deref(), *solve_abelian, opts)
        }
        Command::Obstruction { triple } => obstruction(triple, opts),
        Command::Classify { triple } => classify(triple, opts),
        Command::Pullback { triple, output } => pullback(triple, output.as_deref(), opts),
    }
}

fn validate(path: &str, opts: Options) -> Result<Report, CliError> {
    let alg = algebra(path, opts)?;
    let report = alg.validate();
    let names = alg.space();
    let mut r = Report::new("validate");
    r.line(format!("algebra {}: dim {}", alg.name(), dims(names)));
    r.line(format!(
        "degree 0: {}, antisymmetry: {}, jacobi: {}",
        ok(report.degree_zero.is_empty()),
        ok(report.antisymmetry.is_empty()),
        ok(report.jacobi.is_empty())
    ));
    let pairs = |list: &[crate::superlie::PairViolation], label: &str, r: &mut Report| {
        let mut out = Vec::new();
        for v in list {
            let (a, b) = (names.name(v.left), names.name(v.right));
            r.line(format!("  {label} fails on ({a}, {b}): {}", combo(names, &v.residual)));
            out.push(json!({"left": a, "right": b, "residual": strings(&v.residual)}));
        }
        Value::Array(out)
    };
    let degree_zero = pairs(&report.degree_zero, "degree 0", &mut r);
    let antisymmetry = pairs(&report.antisymmetry, "antisymmetry", &mut r);
    let mut jacobi = Vec::new();
    for v in &report.jacobi {
        let (i, j, k) = v.indices;
        let args = [names.name(i), names.name(j), names.name(k)];
        r.line(format!("  jacobi fails on ({}): {}", args.join(", "), combo(names, &v.residual)));
        jacobi.push(json!({"args": args, "residual": strings(&v.residual)}));
    }
    r.field("algebra", alg.name());
    r.field("dim", json!([names.dim_even(), names.dim_odd()]));
    r.field("degree_zero", degree_zero);
    r.field("antisymmetry", antisymmetry);
    r.field("jacobi", Value::Array(jacobi));
    r.field("passed", report.passed());
    r.code = if report.passed() { 0 } else { 1 };
    Ok(r)
}

fn center(path: &str, opts: Options) -> Result<Report, CliError> {
    let alg = valid_algebra(path, opts)?;
    let basis = alg.center();
    let z = alg.space().subspace(&basis, "z").map_err(failed)?;
    let mut r = Report::new("center");
    r.line(format!("center of {}: dim {}", alg.name(), dims(&z)));
    for (k, v) in basis.iter().enumerate() {
        r.line(format!("  {} = {}", z.name(k), combo(alg.space(), v)));
    }
    r.field("algebra", alg.name());
    r.field("dim", json!([z.dim_even(), z.dim_odd()]));
    r.field("basis", Value::Array(basis.iter().map(|v| strings(v)).collect()));
    Ok(r)
}

fn derivations(path: &str, opts: Options) -> Result<Report, CliError> {
    let alg = valid_algebra(path, opts)?;
    let der = alg.derivations();
    let space = der.space();
    let mut r = Report::new("derivations");
    r.line(format!(
        "der({}): dim {}, inner dim {}",
        alg.name(),
        dims(space),
        der.inner_count()
    ));
    let mut basis = Vec::new();
    for (k, d) in der.basis().iter().enumerate() {
        let parity = if d.degree().is_odd() { "odd" } else { "even" };
        let inner = der.inner_element(k);
        let tag = match inner {
            Some(x) => format!("{parity}, ad of {}", combo(alg.space(), x)),
            None => parity.to_string(),
        };
        r.line(format!("  {} ({tag}): {}", space.name(k), operator(alg.space(), d.matrix())));
        basis.push(json!({
            "name": space.name(k),
            "parity": d.degree().bit(),
            "inner": inner.map(strings),
            "matrix": rows(d.matrix()),
        }));
    }
    r.field("algebra", alg.name());
    r.field("dim", json!([space.dim_even(), space.dim_odd()]));
    r.field("inner_dim", der.inner_count());
    r.field("basis", Value::Array(basis));
    Ok(r)
}

fn out(path: &str, opts: Options) -> Result<Report, CliError> {
    let alg = valid_algebra(path, opts)?;
    let q = alg.out_quotient().map_err(failed)?;
    let space = q.out.space();
    let mut r = Report::new("out");
    r.line(format!(
        "{}: dim {} = der {} / ad of dim {}",
        q.out.name(),
        dims(space),
        dims(q.derivations.space()),
        q.derivations.inner_count()
    ));
    let mut reps = Vec::new();
    for k in 0..q.out.dim() {
        let d = q.representative(k);
        r.line(format!("  {} represented by {}", space.name(k), operator(alg.space(), d.matrix())));
        reps.push(rows(d.matrix()));
    }
    r.lines_from(bracket_lines(&q.out, "  "));
    r.field("algebra", alg.name());
    r.field_of("out", &algebra_file(&q.out));
    r.field("representatives", Value::Array(reps));
    Ok(r)
}

fn cohomology(path: &str, n: usize, module: Option<&str>, opts: Options) -> Result<Report, CliError> {
    let g = valid_algebra(path, opts)?;
    let (m, label) = match module {
        None => (GModule::trivial(g.clone(), SuperVectorSpace::trivial_line()), "k".to_string()),
        Some(mp) => {
            let file: ModuleFile = read_json(mp)?;
            let m = load_module(&Ctx::new(mp), &file, &g)?;
            guard_dim(opts, mp, m.space().dim())?;
            (m, "M".to_string())
        }
    };
    let report = cohomology_space(&m, n, opts.cap).map_err(cohomology_failed)?;
    let (d0, d1) = report.dims();
    let mut r = Report::new("cohomology");
    r.line(format!("H^{n}({}; {label}) with {label} of dim {}", g.name(), dims(m.space())));
    r.line(format!("dim H^{{{n},0}} = {d0}, dim H^{{{n},1}} = {d1}"));
    let mut reps = serde_json::Map::new();
    for y in [Parity::Even, Parity::Odd] {
        let w = report.weight(y);
        let mut list = Vec::new();
        for (k, c) in w.representative_cochains().iter().enumerate() {
            r.line(format!("  class {k} of weight {}:", y.bit()));
            r.lines_from(cochain_lines("c", c).into_iter().map(|l| format!("    {l}")));
            list.push(cochain_json(g.name(), &label, c));
        }
        reps.insert(y.bit().to_string(), Value::Array(list));
    }
    r.with_note();
    r.field("algebra", g.name());
    r.field("arity", n);
    r.field("dims", json!({"0": d0, "1": d1}));
    r.field(
        "cocycles",
        json!({"0": report.weight(Parity::Even).cocycles.len(), "1": report.weight(Parity::Odd).cocycles.len()}),
    );
    r.field(
        "coboundaries",
        json!({"0": report.weight(Parity::Even).coboundaries.len(), "1": report.weight(Parity::Odd).coboundaries.len()}),
    );
    r.field("representatives", Value::Object(reps));
    Ok(r)
}

fn extension(path: &str, opts: Options) -> Result<ExtensionTriple, CliError> {
    let file: ExtensionFile = read_json(path)?;
    let ext = load_extension(&Ctx::new(path), &file)?;
    guard_dim(opts, path, ext.e().dim())?;
    for (field, alg) in [("h", ext.h()), ("e", ext.e()), ("g", ext.g())] {
        require_valid(path, field, alg)?;
    }
    Ok(ext)
}

fn section_data(path: &str, section: &str, opts: Options) -> Result<Report, CliError> {
    let ext = extension(path, opts)?;
    let file: MapFile = read_json(section)?;
    let s = load_map(
        &Ctx::new(section),
        &file,
        (ext.g().name(), ext.g().space()),
        (ext.e().name(), ext.e().space()),
    )?;
    let d = ext.induced_data(&s).map_err(|e| match e {
        ExtensionError::NotASection => Ctx::new(section).at("matrix").invariant("p ∘ s is not the identity of g"),
        other => failed(other),
    })?;
    let check = d.check();
    let mut r = Report::new("section-data");
    r.line(format!("data of {} over {} for the given section", ext.e().name(), ext.g().name()));
    r.lines_from(datum_lines(&d, "  "));
    r.line(format!("conditions: {}", ok(check.passed())));
    r.with_note();
    r.field("datum", datum_json(&d));
    r.field("passed", check.passed());
    r.code = if check.passed() { 0 } else { 1 };
    Ok(r)
}

fn check_lines(d: &ExtensionDatum, r: &mut Report) -> bool {
    let check = d.check();
    let (g, h) = (d.g().space(), d.h().space());
    r.line(format!(
        "derivations: {}, curvature: {}, cyclic: {}",
        ok(check.non_derivations.is_empty()),
        ok(check.curvature.is_empty()),
        ok(check.cyclic.is_empty())
    ));
    let mut non_derivations = Vec::new();
    for f in &check.non_derivations {
        let (a, b) = (h.name(f.pair.0), h.name(f.pair.1));
        r.line(format!(
            "  α({}) breaks the Leibniz rule on ({a}, {b}): {}",
            g.name(f.generator),
            combo(h, &f.residual)
        ));
        non_derivations.push(json!({"generator": g.name(f.generator), "pair": [a, b], "residual": strings(&f.residual)}));
    }
    let mut curvature = Vec::new();
    for f in &check.curvature {
        let args = tuple_names(g, &[f.pair.0, f.pair.1]);
        r.line(format!("  [α, α] - α[,] - ad ρ on ({args}): {}", operator(h, &f.residual)));
        curvature.push(json!({"pair": [g.name(f.pair.0), g.name(f.pair.1)], "residual": rows(&f.residual)}));
    }
    let mut cyclic = Vec::new();
    for f in &check.cyclic {
        let (i, j, k) = f.triple;
        let args = tuple_names(g, &[i, j, k]);
        r.line(format!("  cyclic sum on ({args}): {}", combo(h, &f.residual)));
        cyclic.push(json!({"args": [g.name(i), g.name(j), g.name(k)], "residual": strings(&f.residual)}));
    }
    r.field("non_derivations", Value::Array(non_derivations));
    r.field("curvature", Value::Array(curvature));
    r.field("cyclic", Value::Array(cyclic));
    r.field("passed", check.passed());
    check.passed()
}

fn check_data(path: &str, opts: Options) -> Result<Report, CliError> {
    let d = datum(path, opts)?;
    let mut r = Report::new("check-data");
    r.line(format!("datum over {} with kernel {}", d.g().name(), d.h().name()));
    let passed = check_lines(&d, &mut r);
    r.code = if passed { 0 } else { 1 };
    Ok(r)
}

fn extension_lines(ext: &ExtensionTriple, r: &mut Report) {
    r.line(format!("extension {}: dim {}", ext.e().name(), dims(ext.e().space())));
    r.lines_from(bracket_lines(ext.e(), "  "));
}

fn build(path: &str, output: Option<&str>, opts: Options) -> Result<Report, CliError> {
    let d = datum(path, opts)?;
    let mut r = Report::new("build");
    match build_extension(&d) {
        Ok(ext) => {
            let s = ext.canonical_section();
            let ext = ext.with_section(s).map_err(failed)?;
            extension_lines(&ext, &mut r);
            let file = extension_file(&ext);
            if let Some(o) = output {
                write_file(o, &to_json(&file))?;
                r.line(format!("wrote {o}"));
            }
            r.field_of("extension", &file);
        }
        Err(ExtensionError::InvalidDatum(_)) => {
            r.line("the datum violates the extension conditions");
            check_lines(&d, &mut r);
            r.code = 1;
        }
        Err(e) => return Err(failed(e)),
    }
    Ok(r)
}

fn transform(path: &str, w: &str, output: Option<&str>, opts: Options) -> Result<Report, CliError> {
    let d = datum(path, opts)?;
    let b = witness(w, &d)?;
    let moved = transform_datum(&d, &b).map_err(failed)?;
    let mut r = Report::new("transform");
    r.line("α' = α + ad ∘ b, ρ' = ρ + δ_α b + 1/2 [b, b]∧:");
    r.lines_from(datum_lines(&moved, "  "));
    if let Some(o) = output {
        write_file(o, &to_json(&datum_file(&moved)))?;
        r.line(format!("wrote {o}"));
    }
    r.with_note();
    r.field("datum", datum_json(&moved));
    Ok(r)
}

fn equivalent(path: &str, other: &str, w: &str, opts: Options) -> Result<Report, CliError> {
    let d = datum(path, opts)?;
    let d2 = datum(other, opts)?;
    if d.g() != d2.g() || d.h() != d2.h() {
        return Err(Ctx::new(other).invariant("both data must share g and h"));
    }
    let b = witness(w, &d)?;
    let holds = check_equivalence_witness(&d, &d2, &b).map_err(failed)?;
    let mut r = Report::new("equivalent");
    r.line(format!("witness carries {path} to {other}: {}", if holds { "yes" } else { "no" }));
    r.field("holds", holds);
    r.code = if holds { 0 } else { 1 };
    Ok(r)
}

fn split_check(path: &str, w: Option<&str>, solve: bool, opts: Options) -> Result<Report, CliError> {
    let d = datum(path, opts)?;
    let mut r = Report::new("split-check");
    let mut holds = true;
    if w.is_none() && !solve {
        return Err(CliError::Guard("split-check needs --witness FILE or --solve-abelian".into()));
    }
    if let Some(w) = w {
        let b = witness(w, &d)?;
        let split = check_split_witness(&d, &b).map_err(failed)?;
        r.line(format!("witness splits the datum: {}", if split { "yes" } else { "no" }));
        r.field("witness_splits", split);
        holds &= split;
    }
    if solve {
        match solve_split_abelian(&d) {
            Ok(Some(b)) => {
                r.line(format!("split by b: {}", operator_between(d.g().space(), d.h().space(), &b)));
                r.field_of("solution", &map_file(d.g().name(), d.h().name(), &b));
            }
            Ok(None) => {
                r.line("not split: ρ is not δ_α of any degree-0 b");
                r.field("solution", Value::Null);
                holds = false;
            }
            Err(ExtensionError::NotAbelian) => {
                return Err(Ctx::new(path).at("h").invariant("--solve-abelian needs an abelian h"))
            }
            Err(e) => return Err(failed(e)),
        }
    }
    r.field("split", holds);
    r.code = if holds { 0 } else { 1 };
    Ok(r)
}

fn operator_between(from: &SuperVectorSpace, to: &SuperVectorSpace, b: &GradedLinearMap) -> String {
    let parts: Vec<String> = (0..from.dim())
        .filter_map(|j| {
            let col = b.image_of_basis(j);
            (!crate::gvs::is_zero_vector(&col)).then(|| format!("{} -> {}", from.name(j), combo(to, &col)))
        })
        .collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(", ")
    }
}

fn triple(t: &Triple, opts: Options) -> Result<(SuperLieAlgebra, SuperLieAlgebra, GradedLinearMap), CliError> {
    let g = valid_algebra(&t.g, opts)?;
    let h = valid_algebra(&t.h, opts)?;
    let out = h.out_quotient().map_err(failed)?.out;
    let file: MapFile = read_json(&t.alpha_bar)?;
    let ab = load_map(
        &Ctx::new(&t.alpha_bar),
        &file,
        (g.name(), g.space()),
        (out.name(), out.space()),
    )?;
    if ab.degree() != Parity::Even {
        return Err(Ctx::new(&t.alpha_bar).at("degree").invariant("ᾱ must have degree 0"));
    }
    Ok((g, h, ab))
}

fn not_homomorphism(path: &str, e: CohomologyError) -> CliError {
    match e {
        CohomologyError::NotHomomorphism => Ctx::new(path).invariant("ᾱ is not a homomorphism into out(h)"),
        other => cohomology_failed(other),
    }
}

fn obstruction(t: &Triple, opts: Options) -> Result<Report, CliError> {
    let (g, h, ab) = triple(t, opts)?;
    let o = obstruction_class(&h, &g, &ab, opts.cap).map_err(|e| not_homomorphism(&t.alpha_bar, e))?;
    let z = format!("Z({})", h.name());
    let mut r = Report::new("obstruction");
    r.line(format!("{z}: dim {}", dims(&o.center.space)));
    for k in 0..o.center.dim() {
        r.line(format!("  {} = {}", o.center.space.name(k), combo(h.space(), &o.center.inclusion.column(k))));
    }
    let lifted = ExtensionDatum::new(g.clone(), h.clone(), o.alpha.clone(), o.rho.clone()).map_err(failed)?;
    r.line("lift and curvature:");
    r.lines_from(datum_lines(&lifted, "  "));
    r.lines_from(cochain_lines("λ", &o.lambda).into_iter().map(|l| format!("  {l}")));
    r.line(format!(
        "class in H^{{3,0}}(g; {z}) of dim {}: [{}]",
        o.class.len(),
        o.class.iter().map(crate::gvs::format_scalar).collect::<Vec<_>>().join(", ")
    ));
    r.line(format!("obstruction: {}", if o.vanishes() { "vanishes" } else { "nonzero" }));
    if let Some(mu) = &o.mu {
        r.lines_from(cochain_lines("μ", mu).into_iter().map(|l| format!("  {l}")));
    }
    r.with_note();
    r.field("lift", datum_json(&lifted));
    r.field("center", Value::Array((0..o.center.dim()).map(|k| strings(&o.center.inclusion.column(k))).collect()));
    r.field("lambda", cochain_json(g.name(), &z, &o.lambda));
    r.field("class", strings(&o.class));
    r.field("vanishes", o.vanishes());
    r.field("mu", o.mu.as_ref().map_or(Value::Null, |mu| cochain_json(g.name(), &z, mu)));
    r.code = if o.vanishes() { 0 } else { 1 };
    Ok(r)
}

fn classify(t: &Triple, opts: Options) -> Result<Report, CliError> {
    let (g, h, ab) = triple(t, opts)?;
    let c = classify_extensions(&h, &g, &ab, opts.cap).map_err(|e| not_homomorphism(&t.alpha_bar, e))?;
    let mut r = Report::new("classify");
    r.field("centerless", c.centerless);
    r.field("abelian", c.abelian);
    let Some(base) = &c.base else {
        let class = &c.obstruction.class;
        r.line(format!(
            "no extensions inducing ᾱ: obstruction class [{}]",
            class.iter().map(crate::gvs::format_scalar).collect::<Vec<_>>().join(", ")
        ));
        r.field("obstructed", true);
        r.field("class", strings(class));
        r.code = 1;
        return Ok(r);
    };
    let h2 = c.h2.as_ref().expect("unobstructed classification has H^2");
    let (d0, d1) = h2.dims();
    r.line(format!(
        "extensions inducing ᾱ form a torsor over H^{{2,0}}(g; Z({})) of dim {d0}",
        h.name()
    ));
    r.line("base point (a choice: lift, canonical ρ, canonical μ):");
    r.lines_from(datum_lines(base, "  "));
    let mut generators = Vec::new();
    for (k, d) in c.generators.iter().enumerate() {
        r.line(format!("generator {k}:"));
        r.lines_from(datum_lines(d, "  "));
        generators.push(datum_json(d));
    }
    if c.centerless {
        r.line("h is centerless: the extension is determined by ᾱ alone");
    }
    if c.abelian {
        r.line("h is abelian: classes are the pairs (α, [ρ])");
    }
    r.with_note();
    r.field("obstructed", false);
    r.field("h2_dims", json!({"0": d0, "1": d1}));
    r.field("base", datum_json(base));
    r.field("generators", Value::Array(generators));
    Ok(r)
}

fn pullback(t: &Triple, output: Option<&str>, opts: Options) -> Result<Report, CliError> {
    let (g, h, ab) = triple(t, opts)?;
    let ext = pullback_extension(&h, &g, &ab).map_err(|e| match e {
        ExtensionError::HasCenter => Ctx::new(&t.h).invariant("pullback needs a centerless h"),
        ExtensionError::NotHomomorphism => Ctx::new(&t.alpha_bar).invariant("ᾱ is not a homomorphism into out(h)"),
        other => failed(other),
    })?;
    let mut r = Report::new("pullback");
    extension_lines(&ext, &mut r);
    let file = extension_file(&ext);
    if let Some(o) = output {
        write_file(o, &to_json(&file))?;
        r.line(format!("wrote {o}"));
    }
    r.field_of("extension", &file);
    Ok(r)
}
