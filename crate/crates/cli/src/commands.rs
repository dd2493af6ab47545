use std::path::{Path, PathBuf};

use hom_embed::algebra::{check_3h_leibniz, check_3hl, check_hom_leibniz_with, fundamental_bracket};
use hom_embed::cohomology::{cohomology, tensor_coefficient_count, CochainComplex};
use hom_embed::deformation::{
    check_equivalence_witness, check_linear_deformation, deformations_same_class,
    infinitesimal_is_cocycle, search_witness, EquivalenceWitness,
};
use hom_embed::embedding::{
    check_embedding_tensor, check_et_hom, example_tensor, graph_is_subalgebra, induced_leibniz,
    induced_representation, ExampleKind,
};
use hom_embed::representation::{
    adjoint_representation, check_leibniz_representation, check_representation,
    direct_sum_representation, hemisemidirect_product,
};
use hom_embed::Scalar;

use crate::error::CliError;
use crate::report::Report;
use crate::workspace::{
    hom_leibniz_algebra_def, leibniz_algebra_def, leibniz_representation_def,
    representation_def, rows_from_matrix, Kind, TensorDef, Workspace,
};

pub struct Options {
    pub capacity: usize,
    pub strict_printed: bool,
}

pub fn check(ws: &Workspace, object: &str, opts: &Options, report: &mut Report) -> Result<(), CliError> {
    let kind = ws
        .kind_of(object)
        .ok_or_else(|| CliError::Input(format!("unresolved reference: no object named \"{object}\"")))?;
    report.input("kind", kind.label());
    match kind {
        Kind::Algebra => {
            let l = ws.algebra(object)?;
            let r = check_3hl(&l);
            let ok = r.passed();
            report.check("3-hom-lie algebra", r);
            if ok {
                let f = fundamental_bracket(&l)?;
                report.check(
                    "fundamental objects form a hom-leibniz algebra",
                    check_hom_leibniz_with(&f, opts.strict_printed),
                );
            }
        }
        Kind::Representation => {
            let rep = ws.representation(object)?;
            report.check("representation", check_representation(&rep)?);
        }
        Kind::Tensor => {
            let (rep, t) = ws.tensor_parts(object)?;
            let r = check_embedding_tensor(&rep, &t)?;
            report.check("embedding tensor", r);
            let graph = graph_is_subalgebra(&rep, &t)?;
            report.note(format!(
                "graph criterion: the graph of T {} a subalgebra of the hemisemidirect product",
                if graph { "is" } else { "is not" }
            ));
        }
        Kind::LeibnizAlgebra => {
            let a = ws.leibniz_algebra(object)?;
            report.check("3-hom-leibniz algebra", check_3h_leibniz(&a));
        }
        Kind::HomLeibnizAlgebra => {
            let a = ws.hom_leibniz_algebra(object)?;
            report.check("hom-leibniz algebra", check_hom_leibniz_with(&a, opts.strict_printed));
        }
        Kind::LeibnizRepresentation => {
            let r = ws.leibniz_representation(object)?;
            report.check("leibniz representation", check_leibniz_representation(&r)?);
        }
        Kind::Matrix => {
            return Err(CliError::Input(format!(
                "\"{object}\" is a bare matrix; there is nothing to check"
            )));
        }
        Kind::Morphism => {
            let (hom, src, dst) = ws.morphism_parts(object)?;
            let s = ws.tensor(&src)?;
            let d = ws.tensor(&dst)?;
            report.check("embedding tensor morphism", check_et_hom(&hom, &s, &d)?);
        }
        Kind::Cochain => {
            let (tensor, degree, coeffs) = ws.cochain_tensor(object)?;
            let et = ws.tensor(&tensor)?;
            let cx = CochainComplex::of_tensor(&et);
            match cx.cochain(degree, coeffs) {
                Ok(f) => {
                    report.verdict("equivariant cochain", true);
                    let df = cx.coboundary(&f)?;
                    report.verdict("cocycle", df.is_zero());
                }
                Err(hom_embed::Error::NotCochain(msg)) => {
                    report.verdict("equivariant cochain", false);
                    report.note(msg);
                }
                Err(e) => return Err(e.into()),
            }
        }
        Kind::Deformation => {
            let (base, j) = ws.deformation_parts(object)?;
            let et = ws.tensor(&base)?;
            let r = check_linear_deformation(&et, &j)?;
            let ok = r.passed();
            report.check("linear deformation", r);
            if ok {
                let z = infinitesimal_is_cocycle(&et, &j)?;
                report.note(format!(
                    "infinitesimal {} a 1-cocycle",
                    if z { "is" } else { "is not" }
                ));
            }
        }
        Kind::Witness => {
            return Err(CliError::Input(format!(
                "\"{object}\" is a witness; check it with `deform --witness`"
            )));
        }
    }
    Ok(())
}

pub fn cohomology_cmd(
    ws: &Workspace,
    tensor: &str,
    degrees: &[usize],
    opts: &Options,
    report: &mut Report,
) -> Result<(), CliError> {
    let et = ws.tensor(tensor)?;
    for &n in degrees {
        if n == 0 {
            return Err(CliError::Input("cohomology degrees start at 1".into()));
        }
        let need = tensor_coefficient_count(&et, n + 1);
        if need > opts.capacity {
            return Err(CliError::Capacity(format!(
                "degree {n} needs {need} coefficients in degree {}, limit is {}",
                n + 1,
                opts.capacity
            )));
        }
        report.cohomology.push(cohomology(&et, n)?);
    }
    Ok(())
}

pub struct DeformArgs<'a> {
    pub deformation: &'a str,
    pub same_class: Option<&'a str>,
    pub witness: Option<&'a str>,
    pub search: Option<u32>,
}

fn vector_text(v: &[Scalar]) -> String {
    let parts: Vec<String> = v.iter().map(Scalar::to_string).collect();
    format!("({})", parts.join(", "))
}

pub fn deform(ws: &Workspace, args: &DeformArgs, report: &mut Report) -> Result<(), CliError> {
    let (base, j1) = ws.deformation_parts(args.deformation)?;
    let et = ws.tensor(&base)?;
    let r = check_linear_deformation(&et, &j1)?;
    report.check("linear deformation", r);
    let Some(other) = args.same_class else {
        if args.witness.is_some() || args.search.is_some() {
            return Err(CliError::Input(
                "--witness and --search-witness require --same-class".into(),
            ));
        }
        return Ok(());
    };
    let (base2, j2) = ws.deformation_parts(other)?;
    if base2 != base {
        return Err(CliError::Input(format!(
            "deformations \"{}\" and \"{other}\" have different base tensors",
            args.deformation
        )));
    }
    let same = deformations_same_class(&et, &j1, &j2)?;
    report.verdict("same cohomology class", same);
    if let Some(w) = args.witness {
        let def = ws.witness(w)?;
        let wit = EquivalenceWitness::new(&et, def.a.clone(), def.b.clone())?;
        report.check("equivalence witness", check_equivalence_witness(&et, &j1, &j2, &wit)?);
    }
    if let Some(bound) = args.search {
        match search_witness(&et, &j1, &j2, bound)? {
            Some(w) => report.note(format!(
                "witness found: a = {}, b = {}",
                vector_text(w.a()),
                vector_text(w.b())
            )),
            None => report.note(format!("no witness with coordinates in [-{bound}, {bound}]")),
        }
    }
    Ok(())
}

pub enum Construction {
    Adjoint { algebra: String },
    DirectSum { algebra: String, copies: usize },
    Hemisemidirect { representation: String },
    InducedLeibniz { tensor: String },
    InducedRep { tensor: String },
    Fundamental { algebra: String },
    ExampleTensor { algebra: String, kind: ExampleSpec },
}

pub enum ExampleSpec {
    Identity,
    Derivation(String),
    Sum(usize),
    /// 1-based summand index.
    Projection(usize, usize),
    CustomF(String),
}

fn resolve_example(ws: &Workspace, n: usize, spec: &ExampleSpec) -> Result<ExampleKind, CliError> {
    Ok(match spec {
        ExampleSpec::Identity => ExampleKind::Identity,
        ExampleSpec::Derivation(m) => ExampleKind::Derivation(ws.matrix_sized(m, n, n)?),
        ExampleSpec::Sum(c) => ExampleKind::Sum(*c),
        ExampleSpec::Projection(c, i) => {
            if *i == 0 || i > c {
                return Err(CliError::Input(format!(
                    "projection index {i} is outside 1..={c}"
                )));
            }
            ExampleKind::Projection {
                copies: *c,
                index: i - 1,
            }
        }
        ExampleSpec::CustomF(m) => ExampleKind::CustomF(ws.matrix_sized(m, n, n)?),
    })
}

fn insert<T>(
    map: &mut std::collections::BTreeMap<String, T>,
    name: String,
    value: T,
    kind: Kind,
    outputs: &mut Vec<String>,
) {
    outputs.push(format!("{} {name}", kind.label()));
    map.insert(name, value);
}

pub fn derive(
    ws: &mut Workspace,
    construction: &Construction,
    name: Option<&str>,
    report: &mut Report,
) -> Result<(), CliError> {
    let pick = |default: String| name.map(str::to_string).unwrap_or(default);
    let mut outputs = Vec::new();
    match construction {
        Construction::Adjoint { algebra } => {
            let l = ws.algebra(algebra)?;
            let rep = adjoint_representation(&l)?;
            let n = pick(format!("ad-{algebra}"));
            ws.ensure_fresh(&n)?;
            let def = representation_def(&rep, algebra);
            insert(&mut ws.file.representations, n, def, Kind::Representation, &mut outputs);
        }
        Construction::DirectSum { algebra, copies } => {
            let l = ws.algebra(algebra)?;
            let rep = direct_sum_representation(&l, *copies)?;
            let n = pick(format!("sum{copies}-{algebra}"));
            ws.ensure_fresh(&n)?;
            let def = representation_def(&rep, algebra);
            insert(&mut ws.file.representations, n, def, Kind::Representation, &mut outputs);
        }
        Construction::Hemisemidirect { representation } => {
            let rep = ws.representation(representation)?;
            let a = hemisemidirect_product(&rep);
            let n = pick(format!("hsd-{representation}"));
            ws.ensure_fresh(&n)?;
            let def = leibniz_algebra_def(&a);
            insert(&mut ws.file.leibniz_algebras, n, def, Kind::LeibnizAlgebra, &mut outputs);
        }
        Construction::InducedLeibniz { tensor } => {
            let et = ws.tensor(tensor)?;
            let a = induced_leibniz(&et);
            let n = pick(format!("leib-{tensor}"));
            ws.ensure_fresh(&n)?;
            let def = leibniz_algebra_def(&a);
            insert(&mut ws.file.leibniz_algebras, n, def, Kind::LeibnizAlgebra, &mut outputs);
        }
        Construction::InducedRep { tensor } => {
            let et = ws.tensor(tensor)?;
            let r = induced_representation(&et);
            let n = pick(format!("indrep-{tensor}"));
            let an = format!("{n}-algebra");
            ws.ensure_fresh(&n)?;
            ws.ensure_fresh(&an)?;
            let adef = leibniz_algebra_def(r.algebra());
            let rdef = leibniz_representation_def(&r, &an);
            insert(&mut ws.file.leibniz_algebras, an, adef, Kind::LeibnizAlgebra, &mut outputs);
            insert(
                &mut ws.file.leibniz_representations,
                n,
                rdef,
                Kind::LeibnizRepresentation,
                &mut outputs,
            );
        }
        Construction::Fundamental { algebra } => {
            let l = ws.algebra(algebra)?;
            let f = fundamental_bracket(&l)?;
            let n = pick(format!("fund-{algebra}"));
            ws.ensure_fresh(&n)?;
            let def = hom_leibniz_algebra_def(&f);
            insert(&mut ws.file.hom_leibniz_algebras, n, def, Kind::HomLeibnizAlgebra, &mut outputs);
        }
        Construction::ExampleTensor { algebra, kind } => {
            let l = ws.algebra(algebra)?;
            let k = resolve_example(ws, l.dim(), kind)?;
            let et = example_tensor(&l, &k)?;
            let n = pick(format!("ex-{algebra}"));
            let rn = format!("{n}-rep");
            ws.ensure_fresh(&n)?;
            ws.ensure_fresh(&rn)?;
            let rdef = representation_def(et.rep(), algebra);
            let tdef = TensorDef {
                representation: rn.clone(),
                matrix: rows_from_matrix(et.t()),
            };
            insert(&mut ws.file.representations, rn, rdef, Kind::Representation, &mut outputs);
            insert(&mut ws.file.tensors, n, tdef, Kind::Tensor, &mut outputs);
        }
    }
    report.outputs.extend(outputs);
    Ok(())
}

pub fn output_path(input: &Path, output: Option<&PathBuf>) -> PathBuf {
    output.cloned().unwrap_or_else(|| input.to_path_buf())
}

