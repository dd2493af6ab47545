//! The JSON workspace file: named objects with 1-based indices and exact
//! rational strings, plus conversion to and from library values.

use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;

use hom_embed::algebra::{HomLeibnizAlgebra, ThreeHomLeibnizAlgebra, ThreeHomLieAlgebra};
use hom_embed::embedding::{EmbeddingTensor, EtMorphism};
use hom_embed::linalg::{Matrix, Tensor, Vector};
use hom_embed::representation::{LeibnizRepresentation, Representation};
use hom_embed::wedge::pairs;
use hom_embed::Scalar;
use serde::{Deserialize, Serialize};

use crate::error::CliError;

pub const FORMAT_VERSION: &str = "1";

pub type Rows = Vec<Vec<Scalar>>;

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WorkspaceFile {
    pub format_version: String,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub algebras: BTreeMap<String, AlgebraDef>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub representations: BTreeMap<String, RepresentationDef>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub tensors: BTreeMap<String, TensorDef>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub leibniz_algebras: BTreeMap<String, LeibnizAlgebraDef>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub hom_leibniz_algebras: BTreeMap<String, HomLeibnizAlgebraDef>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub leibniz_representations: BTreeMap<String, LeibnizRepresentationDef>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub matrices: BTreeMap<String, Rows>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub morphisms: BTreeMap<String, MorphismDef>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub cochains: BTreeMap<String, CochainDef>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub deformations: BTreeMap<String, DeformationDef>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub witnesses: BTreeMap<String, WitnessDef>,
}

/// Bracket keys are `"i,j,k"` with `i < j < k`; omitted keys bracket to zero.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDef {
    pub dim: usize,
    pub alpha: Rows,
    #[serde(default)]
    pub bracket: BTreeMap<String, Vec<Scalar>>,
}

/// Action keys are `"i,j"` with `i < j`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RepresentationDef {
    pub algebra: String,
    pub vdim: usize,
    pub beta: Rows,
    #[serde(default)]
    pub rho: BTreeMap<String, Rows>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TensorDef {
    pub representation: String,
    pub matrix: Rows,
}

/// Bracket keys are any `"i,j,k"`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LeibnizAlgebraDef {
    pub dim: usize,
    pub twist: Rows,
    #[serde(default)]
    pub bracket: BTreeMap<String, Vec<Scalar>>,
}

/// Bracket keys are any `"i,j"`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HomLeibnizAlgebraDef {
    pub dim: usize,
    pub twist: Rows,
    #[serde(default)]
    pub bracket: BTreeMap<String, Vec<Scalar>>,
}

/// Keys are `"x,y,u"` for `l`, `"x,u,z"` for `m` and `"u,y,z"` for `r`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LeibnizRepresentationDef {
    pub algebra: String,
    pub wdim: usize,
    pub beta: Rows,
    #[serde(default)]
    pub l: BTreeMap<String, Vec<Scalar>>,
    #[serde(default)]
    pub m: BTreeMap<String, Vec<Scalar>>,
    #[serde(default)]
    pub r: BTreeMap<String, Vec<Scalar>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismDef {
    pub source: String,
    pub target: String,
    pub psi_l: Rows,
    pub psi_v: Rows,
}

/// Entry keys index the coefficient tensor: pair slots (pairs of `V`
/// numbered in lexicographic order), then the last slot, then the output.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CochainDef {
    pub tensor: String,
    pub degree: usize,
    #[serde(default)]
    pub entries: BTreeMap<String, Scalar>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DeformationDef {
    pub base: String,
    pub infinitesimal: Rows,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WitnessDef {
    pub a: Vec<Scalar>,
    pub b: Vec<Scalar>,
}

/// Object kinds, in file order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Algebra,
    Representation,
    Tensor,
    LeibnizAlgebra,
    HomLeibnizAlgebra,
    LeibnizRepresentation,
    Matrix,
    Morphism,
    Cochain,
    Deformation,
    Witness,
}

impl Kind {
    pub fn label(self) -> &'static str {
        match self {
            Kind::Algebra => "algebra",
            Kind::Representation => "representation",
            Kind::Tensor => "tensor",
            Kind::LeibnizAlgebra => "leibniz_algebra",
            Kind::HomLeibnizAlgebra => "hom_leibniz_algebra",
            Kind::LeibnizRepresentation => "leibniz_representation",
            Kind::Matrix => "matrix",
            Kind::Morphism => "morphism",
            Kind::Cochain => "cochain",
            Kind::Deformation => "deformation",
            Kind::Witness => "witness",
        }
    }
}

fn input(msg: impl Into<String>) -> CliError {
    CliError::Input(msg.into())
}

pub fn matrix_from_rows(rows: &Rows, nrows: usize, ncols: usize, what: &str) -> Result<Matrix, CliError> {
    if rows.len() != nrows || rows.iter().any(|r| r.len() != ncols) {
        return Err(input(format!(
            "dimension mismatch: {what} must be {nrows}x{ncols}"
        )));
    }
    Ok(Matrix::from_fn(nrows, ncols, |i, j| rows[i][j].clone()))
}

pub fn rows_from_matrix(m: &Matrix) -> Rows {
    m.row_vectors()
}

fn vector_len(v: &[Scalar], n: usize, what: &str) -> Result<Vector, CliError> {
    if v.len() != n {
        return Err(input(format!(
            "dimension mismatch: {what} has length {}, expected {n}",
            v.len()
        )));
    }
    Ok(v.to_vec())
}

/// Parses a 1-based comma-separated index key into 0-based indices.
pub fn parse_key(key: &str, arity: usize, bounds: &[usize], what: &str) -> Result<Vec<usize>, CliError> {
    let parts: Vec<&str> = key.split(',').map(str::trim).collect();
    if parts.len() != arity {
        return Err(input(format!(
            "{what}: key \"{key}\" must have {arity} comma-separated indices"
        )));
    }
    parts
        .iter()
        .zip(bounds)
        .map(|(p, &b)| {
            let i: usize = p
                .parse()
                .map_err(|_| input(format!("{what}: key \"{key}\" has a malformed index")))?;
            if i == 0 || i > b {
                return Err(input(format!(
                    "{what}: index {i} in key \"{key}\" is outside 1..={b}"
                )));
            }
            Ok(i - 1)
        })
        .collect()
}

pub fn format_key(idx: &[usize]) -> String {
    idx.iter()
        .map(|i| (i + 1).to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn core(e: hom_embed::Error) -> CliError {
    CliError::from(e)
}

pub struct Workspace {
    pub file: WorkspaceFile,
}

impl Workspace {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let file: WorkspaceFile = serde_json::from_str(text).map_err(|e| {
            input(format!(
                "parse error at line {}, column {}: {e}",
                e.line(),
                e.column()
            ))
        })?;
        if file.format_version != FORMAT_VERSION {
            return Err(input(format!(
                "unsupported format_version \"{}\" (expected \"{FORMAT_VERSION}\")",
                file.format_version
            )));
        }
        let ws = Workspace { file };
        ws.validate()?;
        Ok(ws)
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| input(format!("cannot read {}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn render(&self) -> String {
        crate::json::to_string(&self.file)
    }

    pub fn save(&self, path: &Path) -> Result<(), CliError> {
        std::fs::write(path, self.render())
            .map_err(|e| input(format!("cannot write {}: {e}", path.display())))
    }

    fn names(&self) -> Vec<(Kind, &String)> {
        let f = &self.file;
        let mut out: Vec<(Kind, &String)> = Vec::new();
        out.extend(f.algebras.keys().map(|k| (Kind::Algebra, k)));
        out.extend(f.representations.keys().map(|k| (Kind::Representation, k)));
        out.extend(f.tensors.keys().map(|k| (Kind::Tensor, k)));
        out.extend(f.leibniz_algebras.keys().map(|k| (Kind::LeibnizAlgebra, k)));
        out.extend(f.hom_leibniz_algebras.keys().map(|k| (Kind::HomLeibnizAlgebra, k)));
        out.extend(
            f.leibniz_representations
                .keys()
                .map(|k| (Kind::LeibnizRepresentation, k)),
        );
        out.extend(f.matrices.keys().map(|k| (Kind::Matrix, k)));
        out.extend(f.morphisms.keys().map(|k| (Kind::Morphism, k)));
        out.extend(f.cochains.keys().map(|k| (Kind::Cochain, k)));
        out.extend(f.deformations.keys().map(|k| (Kind::Deformation, k)));
        out.extend(f.witnesses.keys().map(|k| (Kind::Witness, k)));
        out
    }

    pub fn kind_of(&self, name: &str) -> Option<Kind> {
        self.names()
            .into_iter()
            .find(|(_, n)| n.as_str() == name)
            .map(|(k, _)| k)
    }

    pub fn contains(&self, name: &str) -> bool {
        self.kind_of(name).is_some()
    }

    /// Builds every object structurally so that references and dimensions
    /// are known to be consistent; axioms are not checked here.
    fn validate(&self) -> Result<(), CliError> {
        let mut seen = BTreeSet::new();
        for (_, n) in self.names() {
            if !seen.insert(n.clone()) {
                return Err(input(format!("object name \"{n}\" is used more than once")));
            }
        }
        let f = &self.file;
        for n in f.algebras.keys() {
            self.algebra(n)?;
        }
        for n in f.representations.keys() {
            self.representation(n)?;
        }
        for n in f.tensors.keys() {
            self.tensor_parts(n)?;
        }
        for n in f.leibniz_algebras.keys() {
            self.leibniz_algebra(n)?;
        }
        for n in f.hom_leibniz_algebras.keys() {
            self.hom_leibniz_algebra(n)?;
        }
        for n in f.leibniz_representations.keys() {
            self.leibniz_representation(n)?;
        }
        for n in f.morphisms.keys() {
            self.morphism_parts(n)?;
        }
        for n in f.cochains.keys() {
            self.cochain_tensor(n)?;
        }
        for n in f.deformations.keys() {
            self.deformation_parts(n)?;
        }
        for (n, w) in &f.witnesses {
            if w.a.len() != w.b.len() {
                return Err(input(format!(
                    "dimension mismatch: witness \"{n}\" has vectors of different lengths"
                )));
            }
        }
        Ok(())
    }

    fn lookup<'a, T>(map: &'a BTreeMap<String, T>, name: &str, kind: &str) -> Result<&'a T, CliError> {
        map.get(name)
            .ok_or_else(|| input(format!("unresolved reference: no {kind} named \"{name}\"")))
    }

    pub fn algebra(&self, name: &str) -> Result<ThreeHomLieAlgebra, CliError> {
        let d = Self::lookup(&self.file.algebras, name, "algebra")?;
        let what = format!("algebra \"{name}\"");
        let alpha = matrix_from_rows(&d.alpha, d.dim, d.dim, &format!("alpha of {what}"))?;
        let mut entries = Vec::new();
        for (key, v) in &d.bracket {
            let idx = parse_key(key, 3, &[d.dim; 3], &what)?;
            if !(idx[0] < idx[1] && idx[1] < idx[2]) {
                return Err(input(format!(
                    "{what}: bracket key \"{key}\" must be strictly increasing"
                )));
            }
            let v = vector_len(v, d.dim, &format!("bracket value \"{key}\" of {what}"))?;
            entries.push(((idx[0], idx[1], idx[2]), v));
        }
        ThreeHomLieAlgebra::new(d.dim, alpha, entries).map_err(core)
    }

    pub fn representation(&self, name: &str) -> Result<Representation, CliError> {
        let d = Self::lookup(&self.file.representations, name, "representation")?;
        let what = format!("representation \"{name}\"");
        let l = self.algebra(&d.algebra)?;
        let n = l.dim();
        let beta = matrix_from_rows(&d.beta, d.vdim, d.vdim, &format!("beta of {what}"))?;
        let mut rho = Vec::new();
        for (key, rows) in &d.rho {
            let idx = parse_key(key, 2, &[n; 2], &what)?;
            if idx[0] >= idx[1] {
                return Err(input(format!(
                    "{what}: action key \"{key}\" must be strictly increasing"
                )));
            }
            let m = matrix_from_rows(rows, d.vdim, d.vdim, &format!("action \"{key}\" of {what}"))?;
            rho.push(((idx[0], idx[1]), m));
        }
        Representation::new(l, d.vdim, rho, beta).map_err(core)
    }

    pub fn tensor_parts(&self, name: &str) -> Result<(Representation, Matrix), CliError> {
        let d = Self::lookup(&self.file.tensors, name, "tensor")?;
        let rep = self.representation(&d.representation)?;
        let t = matrix_from_rows(
            &d.matrix,
            rep.ldim(),
            rep.vdim(),
            &format!("matrix of tensor \"{name}\""),
        )?;
        Ok((rep, t))
    }

    pub fn tensor(&self, name: &str) -> Result<EmbeddingTensor, CliError> {
        let (rep, t) = self.tensor_parts(name)?;
        EmbeddingTensor::new(rep, t).map_err(core)
    }

    pub fn leibniz_algebra(&self, name: &str) -> Result<ThreeHomLeibnizAlgebra, CliError> {
        let d = Self::lookup(&self.file.leibniz_algebras, name, "leibniz_algebra")?;
        let what = format!("leibniz_algebra \"{name}\"");
        let twist = matrix_from_rows(&d.twist, d.dim, d.dim, &format!("twist of {what}"))?;
        let mut table = Tensor::zeros(&[d.dim; 4]);
        for (key, v) in &d.bracket {
            let idx = parse_key(key, 3, &[d.dim; 3], &what)?;
            let v = vector_len(v, d.dim, &format!("bracket value \"{key}\" of {what}"))?;
            table.fibre_mut(&idx).clone_from_slice(&v);
        }
        ThreeHomLeibnizAlgebra::new(d.dim, table, twist).map_err(core)
    }

    pub fn hom_leibniz_algebra(&self, name: &str) -> Result<HomLeibnizAlgebra, CliError> {
        let d = Self::lookup(&self.file.hom_leibniz_algebras, name, "hom_leibniz_algebra")?;
        let what = format!("hom_leibniz_algebra \"{name}\"");
        let twist = matrix_from_rows(&d.twist, d.dim, d.dim, &format!("twist of {what}"))?;
        let mut table = Tensor::zeros(&[d.dim; 3]);
        for (key, v) in &d.bracket {
            let idx = parse_key(key, 2, &[d.dim; 2], &what)?;
            let v = vector_len(v, d.dim, &format!("bracket value \"{key}\" of {what}"))?;
            table.fibre_mut(&idx).clone_from_slice(&v);
        }
        HomLeibnizAlgebra::new(d.dim, table, twist).map_err(core)
    }

    pub fn leibniz_representation(&self, name: &str) -> Result<LeibnizRepresentation, CliError> {
        let d = Self::lookup(&self.file.leibniz_representations, name, "leibniz_representation")?;
        let what = format!("leibniz_representation \"{name}\"");
        let alg = self.leibniz_algebra(&d.algebra)?;
        let (a, w) = (alg.dim(), d.wdim);
        let beta = matrix_from_rows(&d.beta, w, w, &format!("beta of {what}"))?;
        let fill = |map: &BTreeMap<String, Vec<Scalar>>, bounds: [usize; 3], label: &str| {
            let mut t = Tensor::zeros(&[bounds[0], bounds[1], bounds[2], w]);
            for (key, v) in map {
                let idx = parse_key(key, 3, &bounds, &format!("{label} of {what}"))?;
                let v = vector_len(v, w, &format!("{label} value \"{key}\" of {what}"))?;
                t.fibre_mut(&idx).clone_from_slice(&v);
            }
            Ok::<_, CliError>(t)
        };
        let l = fill(&d.l, [a, a, w], "l")?;
        let m = fill(&d.m, [a, w, a], "m")?;
        let r = fill(&d.r, [w, a, a], "r")?;
        LeibnizRepresentation::new(alg, w, l, m, r, beta).map_err(core)
    }

    pub fn matrix(&self, name: &str) -> Result<&Rows, CliError> {
        Self::lookup(&self.file.matrices, name, "matrix")
    }

    /// A named matrix of known shape.
    pub fn matrix_sized(&self, name: &str, rows: usize, cols: usize) -> Result<Matrix, CliError> {
        let r = self.matrix(name)?;
        matrix_from_rows(r, rows, cols, &format!("matrix \"{name}\""))
    }

    pub fn morphism_parts(&self, name: &str) -> Result<(EtMorphism, String, String), CliError> {
        let d = Self::lookup(&self.file.morphisms, name, "morphism")?;
        let (rep, _) = self.tensor_parts(&d.source)?;
        self.tensor_parts(&d.target)?;
        let what = format!("morphism \"{name}\"");
        let psi_l = matrix_from_rows(&d.psi_l, rep.ldim(), rep.ldim(), &format!("psi_l of {what}"))?;
        let psi_v = matrix_from_rows(&d.psi_v, rep.vdim(), rep.vdim(), &format!("psi_v of {what}"))?;
        Ok((EtMorphism { psi_l, psi_v }, d.source.clone(), d.target.clone()))
    }

    /// The coefficient tensor of a cochain in the complex of its tensor.
    pub fn cochain_tensor(&self, name: &str) -> Result<(String, usize, Tensor), CliError> {
        let d = Self::lookup(&self.file.cochains, name, "cochain")?;
        let (rep, _) = self.tensor_parts(&d.tensor)?;
        if d.degree == 0 {
            return Err(input(format!("cochain \"{name}\": degree must be at least 1")));
        }
        let (n, m) = (rep.ldim(), rep.vdim());
        let mut shape = vec![pairs(m).len(); d.degree - 1];
        shape.push(m);
        shape.push(n);
        let mut t = Tensor::zeros(&shape);
        for (key, x) in &d.entries {
            let idx = parse_key(key, shape.len(), &shape, &format!("cochain \"{name}\""))?;
            t.set(&idx, x.clone());
        }
        Ok((d.tensor.clone(), d.degree, t))
    }

    pub fn deformation_parts(&self, name: &str) -> Result<(String, Matrix), CliError> {
        let d = Self::lookup(&self.file.deformations, name, "deformation")?;
        let (rep, _) = self.tensor_parts(&d.base)?;
        let j = matrix_from_rows(
            &d.infinitesimal,
            rep.ldim(),
            rep.vdim(),
            &format!("infinitesimal of deformation \"{name}\""),
        )?;
        Ok((d.base.clone(), j))
    }

    pub fn witness(&self, name: &str) -> Result<&WitnessDef, CliError> {
        Self::lookup(&self.file.witnesses, name, "witness")
    }

    pub fn ensure_fresh(&self, name: &str) -> Result<(), CliError> {
        if self.contains(name) {
            return Err(input(format!("object name \"{name}\" already exists")));
        }
        Ok(())
    }
}

fn nonzero(v: &[Scalar]) -> bool {
    v.iter().any(|x| !x.is_zero())
}

pub fn representation_def(rep: &Representation, algebra: &str) -> RepresentationDef {
    let n = rep.ldim();
    RepresentationDef {
        algebra: algebra.to_string(),
        vdim: rep.vdim(),
        beta: rows_from_matrix(rep.beta()),
        rho: pairs(n)
            .into_iter()
            .zip(rep.pair_actions())
            .filter(|(_, m)| !m.is_zero())
            .map(|((i, j), m)| (format_key(&[i, j]), rows_from_matrix(m)))
            .collect(),
    }
}

fn sparse_fibres(t: &Tensor, arity: usize) -> BTreeMap<String, Vec<Scalar>> {
    let shape = &t.shape()[..arity];
    let mut out = BTreeMap::new();
    let total: usize = shape.iter().product();
    for flat in 0..total {
        let mut idx = vec![0; arity];
        let mut r = flat;
        for k in (0..arity).rev() {
            idx[k] = r % shape[k];
            r /= shape[k];
        }
        let v = t.fibre(&idx);
        if nonzero(v) {
            out.insert(format_key(&idx), v.to_vec());
        }
    }
    out
}

pub fn leibniz_algebra_def(a: &ThreeHomLeibnizAlgebra) -> LeibnizAlgebraDef {
    LeibnizAlgebraDef {
        dim: a.dim(),
        twist: rows_from_matrix(a.twist()),
        bracket: sparse_fibres(a.table(), 3),
    }
}

pub fn hom_leibniz_algebra_def(a: &HomLeibnizAlgebra) -> HomLeibnizAlgebraDef {
    HomLeibnizAlgebraDef {
        dim: a.dim(),
        twist: rows_from_matrix(a.twist()),
        bracket: sparse_fibres(a.table(), 2),
    }
}

pub fn leibniz_representation_def(r: &LeibnizRepresentation, algebra: &str) -> LeibnizRepresentationDef {
    LeibnizRepresentationDef {
        algebra: algebra.to_string(),
        wdim: r.wdim(),
        beta: rows_from_matrix(r.beta()),
        l: sparse_fibres(r.l_tensor(), 3),
        m: sparse_fibres(r.m_tensor(), 3),
        r: sparse_fibres(r.r_tensor(), 3),
    }
}
