//! One instance per JSON file: a ring descriptor, a kind tag, the carrier
//! dimensions and the structure-constant matrices (row-major; exact entries,
//! rationals written as `"p/q"` strings so no float ever sneaks in).

use std::collections::BTreeMap;

use pairlab::comonadics::QCounitalCoalgebra;
use pairlab::entwine::{ComoduleEntwining, ModuleEntwining};
use pairlab::mixed::MixedDistributiveLaw;
use pairlab::monadics::QUnitalAlgebra;
use pairlab::pairing::DualPairing;
use pairlab::{ExactRing, LinMap, Scalar};
use serde::{Deserialize, Serialize};
use serde_json::Value;

pub type Matrix = Vec<Vec<Value>>;

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub ring: String,
    pub kind: String,
    pub dims: Vec<usize>,
    pub matrices: BTreeMap<String, Matrix>,
}

/// A fully validated instance, ready for law checks and constructions.
#[derive(Debug, Clone)]
pub enum Instance {
    Algebra(QUnitalAlgebra),
    Coalgebra(QCounitalCoalgebra),
    Module(QUnitalAlgebra, usize, LinMap),
    Comodule(QCounitalCoalgebra, usize, LinMap),
    Pairing(DualPairing),
    /// Exchange map plus (optionally) the inner carrier's own algebra
    /// structure, needed for the entwined product.
    EntwiningModule(ModuleEntwining, Option<QUnitalAlgebra>),
    EntwiningComodule(ComoduleEntwining, Option<QCounitalCoalgebra>),
    Mixed(MixedDistributiveLaw),
}

pub fn parse_ring(s: &str) -> Result<ExactRing, String> {
    if s == "Q" {
        return Ok(ExactRing::Rationals);
    }
    if let Some(rest) = s.strip_prefix('Z') {
        let n: u64 = rest
            .parse()
            .map_err(|_| format!("bad ring descriptor `{s}` (expected `Q` or `Z<n>`)"))?;
        return ExactRing::zn(n).map_err(|e| e.to_string());
    }
    Err(format!("bad ring descriptor `{s}` (expected `Q` or `Z<n>`)"))
}

pub fn render_ring(ring: ExactRing) -> String {
    match ring {
        ExactRing::Rationals => "Q".into(),
        ExactRing::Zn(n) => format!("Z{n}"),
    }
}

fn value_to_scalar(ring: ExactRing, v: &Value) -> Result<Scalar, String> {
    match v {
        Value::Number(n) => {
            let x = n.as_i64().ok_or_else(|| format!("non-integer entry {n}"))?;
            Ok(ring.from_i64(x))
        }
        Value::String(s) => {
            if let Some((p, q)) = s.split_once('/') {
                if ring != ExactRing::Rationals {
                    return Err(format!(
                        "fractional entry `{s}` only makes sense over Q"
                    ));
                }
                let p: i64 = p.trim().parse().map_err(|_| format!("bad entry `{s}`"))?;
                let q: i64 = q.trim().parse().map_err(|_| format!("bad entry `{s}`"))?;
                if q == 0 {
                    return Err(format!("zero denominator in `{s}`"));
                }
                Ok(Scalar::rational(p, q))
            } else {
                let x: i64 = s.trim().parse().map_err(|_| format!("bad entry `{s}`"))?;
                Ok(ring.from_i64(x))
            }
        }
        other => Err(format!("matrix entry must be an integer or a string, got {other}")),
    }
}

fn scalar_to_value(ring: ExactRing, s: &Scalar) -> Value {
    match (ring, s) {
        (ExactRing::Zn(_), Scalar::Int(x)) => Value::from(*x),
        _ => Value::String(s.render()),
    }
}

pub fn matrix_to_linmap(
    ring: ExactRing,
    rows: usize,
    cols: usize,
    m: &Matrix,
    name: &str,
) -> Result<LinMap, String> {
    if m.len() != rows {
        return Err(format!("matrix `{name}`: expected {rows} rows, got {}", m.len()));
    }
    let mut entries = Vec::with_capacity(rows * cols);
    for (i, row) in m.iter().enumerate() {
        if row.len() != cols {
            return Err(format!(
                "matrix `{name}` row {i}: expected {cols} columns, got {}",
                row.len()
            ));
        }
        for v in row {
            entries.push(value_to_scalar(ring, v).map_err(|e| format!("matrix `{name}`: {e}"))?);
        }
    }
    LinMap::new(ring, rows, cols, entries).map_err(|e| format!("matrix `{name}`: {e}"))
}

pub fn linmap_to_matrix(l: &LinMap) -> Matrix {
    (0..l.rows())
        .map(|i| (0..l.cols()).map(|j| scalar_to_value(l.ring(), l.get(i, j))).collect())
        .collect()
}

impl InstanceFile {
    pub fn load(path: &std::path::Path) -> Result<Self, String> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
        serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))
    }

    pub fn save(&self, path: &std::path::Path) -> Result<(), String> {
        let text = serde_json::to_string_pretty(self).expect("serializable");
        std::fs::write(path, text + "\n").map_err(|e| format!("cannot write {}: {e}", path.display()))
    }

    fn dims_exact(&self, n: usize) -> Result<(), String> {
        if self.dims.len() != n {
            return Err(format!(
                "kind `{}` needs {n} dims, got {}",
                self.kind,
                self.dims.len()
            ));
        }
        Ok(())
    }

    fn mat(&self, ring: ExactRing, name: &str, rows: usize, cols: usize) -> Result<LinMap, String> {
        let m = self
            .matrices
            .get(name)
            .ok_or_else(|| format!("missing matrix `{name}`"))?;
        matrix_to_linmap(ring, rows, cols, m, name)
    }

    fn opt_mat(
        &self,
        ring: ExactRing,
        name: &str,
        rows: usize,
        cols: usize,
    ) -> Result<Option<LinMap>, String> {
        match self.matrices.get(name) {
            None => Ok(None),
            Some(m) => matrix_to_linmap(ring, rows, cols, m, name).map(Some),
        }
    }

    /// Validate and build the typed instance.
    pub fn build(&self) -> Result<Instance, String> {
        let ring = parse_ring(&self.ring)?;
        let err = |e: pairlab::Error| e.to_string();
        match self.kind.as_str() {
            "algebra" => {
                self.dims_exact(1)?;
                let d = self.dims[0];
                let m = self.mat(ring, "product", d, d * d)?;
                let u = self.mat(ring, "unit", d, 1)?;
                Ok(Instance::Algebra(QUnitalAlgebra::new(ring, d, m, u).map_err(err)?))
            }
            "coalgebra" => {
                self.dims_exact(1)?;
                let d = self.dims[0];
                let delta = self.mat(ring, "coproduct", d * d, d)?;
                let eps = self.mat(ring, "counit", 1, d)?;
                Ok(Instance::Coalgebra(
                    QCounitalCoalgebra::new(ring, d, delta, eps).map_err(err)?,
                ))
            }
            "module" => {
                self.dims_exact(2)?;
                let (d, k) = (self.dims[0], self.dims[1]);
                let m = self.mat(ring, "product", d, d * d)?;
                let u = self.mat(ring, "unit", d, 1)?;
                let rho = self.mat(ring, "action", k, d * k)?;
                let alg = QUnitalAlgebra::new(ring, d, m, u).map_err(err)?;
                Ok(Instance::Module(alg, k, rho))
            }
            "comodule" => {
                self.dims_exact(2)?;
                let (d, k) = (self.dims[0], self.dims[1]);
                let delta = self.mat(ring, "coproduct", d * d, d)?;
                let eps = self.mat(ring, "counit", 1, d)?;
                let upsilon = self.mat(ring, "coaction", d * k, k)?;
                let coalg = QCounitalCoalgebra::new(ring, d, delta, eps).map_err(err)?;
                Ok(Instance::Comodule(coalg, k, upsilon))
            }
            "pairing" => {
                self.dims_exact(2)?;
                let (a, b) = (self.dims[0], self.dims[1]);
                let eta = self.mat(ring, "eta", b * a, 1)?;
                let eps = self.mat(ring, "eps", 1, a * b)?;
                Ok(Instance::Pairing(
                    DualPairing::new(ring, a, b, eta, eps).map_err(err)?,
                ))
            }
            "entwining-module" => {
                self.dims_exact(3)?;
                let (l, f, t) = (self.dims[0], self.dims[1], self.dims[2]);
                let ml = self.mat(ring, "product_l", l, l * l)?;
                let ul = self.mat(ring, "unit_l", l, 1)?;
                let mf = self.mat(ring, "product_f", f, f * f)?;
                let uf = self.mat(ring, "unit_f", f, 1)?;
                let lambda = self.mat(ring, "lambda", t * f, l * t)?;
                let alg_l = QUnitalAlgebra::new(ring, l, ml, ul).map_err(err)?;
                let alg_f = QUnitalAlgebra::new(ring, f, mf, uf).map_err(err)?;
                let inner = match (
                    self.opt_mat(ring, "product_t", t, t * t)?,
                    self.opt_mat(ring, "unit_t", t, 1)?,
                ) {
                    (Some(mt), Some(ut)) => {
                        Some(QUnitalAlgebra::new(ring, t, mt, ut).map_err(err)?)
                    }
                    (None, None) => None,
                    _ => return Err("product_t and unit_t must appear together".into()),
                };
                let ent = ModuleEntwining::new(alg_l, alg_f, t, lambda).map_err(err)?;
                Ok(Instance::EntwiningModule(ent, inner))
            }
            "entwining-comodule" => {
                self.dims_exact(3)?;
                let (g, h, t) = (self.dims[0], self.dims[1], self.dims[2]);
                let dg = self.mat(ring, "coproduct_g", g * g, g)?;
                let eg = self.mat(ring, "counit_g", 1, g)?;
                let dh = self.mat(ring, "coproduct_h", h * h, h)?;
                let eh = self.mat(ring, "counit_h", 1, h)?;
                let psi = self.mat(ring, "psi", h * t, t * g)?;
                let coalg_g = QCounitalCoalgebra::new(ring, g, dg, eg).map_err(err)?;
                let coalg_h = QCounitalCoalgebra::new(ring, h, dh, eh).map_err(err)?;
                let inner = match (
                    self.opt_mat(ring, "coproduct_t", t * t, t)?,
                    self.opt_mat(ring, "counit_t", 1, t)?,
                ) {
                    (Some(dt), Some(et)) => {
                        Some(QCounitalCoalgebra::new(ring, t, dt, et).map_err(err)?)
                    }
                    (None, None) => None,
                    _ => return Err("coproduct_t and counit_t must appear together".into()),
                };
                let ent = ComoduleEntwining::new(coalg_g, coalg_h, t, psi).map_err(err)?;
                Ok(Instance::EntwiningComodule(ent, inner))
            }
            "mixed" => {
                self.dims_exact(2)?;
                let (f, g) = (self.dims[0], self.dims[1]);
                let m = self.mat(ring, "product", f, f * f)?;
                let u = self.mat(ring, "unit", f, 1)?;
                let delta = self.mat(ring, "coproduct", g * g, g)?;
                let eps = self.mat(ring, "counit", 1, g)?;
                let omega = self.mat(ring, "omega", g * f, f * g)?;
                let monad = QUnitalAlgebra::new(ring, f, m, u).map_err(err)?;
                let comonad = QCounitalCoalgebra::new(ring, g, delta, eps).map_err(err)?;
                Ok(Instance::Mixed(
                    MixedDistributiveLaw::new(monad, comonad, omega).map_err(err)?,
                ))
            }
            other => Err(format!("unknown kind `{other}`")),
        }
    }

    pub fn from_algebra(alg: &QUnitalAlgebra) -> Self {
        let mut matrices = BTreeMap::new();
        matrices.insert("product".into(), linmap_to_matrix(alg.product()));
        matrices.insert("unit".into(), linmap_to_matrix(alg.unit()));
        InstanceFile {
            ring: render_ring(alg.ring()),
            kind: "algebra".into(),
            dims: vec![alg.dim()],
            matrices,
        }
    }

    pub fn from_coalgebra(coalg: &QCounitalCoalgebra) -> Self {
        let mut matrices = BTreeMap::new();
        matrices.insert("coproduct".into(), linmap_to_matrix(coalg.coproduct()));
        matrices.insert("counit".into(), linmap_to_matrix(coalg.counit()));
        InstanceFile {
            ring: render_ring(coalg.ring()),
            kind: "coalgebra".into(),
            dims: vec![coalg.dim()],
            matrices,
        }
    }

    pub fn from_pairing(p: &DualPairing) -> Self {
        let mut matrices = BTreeMap::new();
        matrices.insert("eta".into(), linmap_to_matrix(p.eta()));
        matrices.insert("eps".into(), linmap_to_matrix(p.eps()));
        InstanceFile {
            ring: render_ring(p.ring()),
            kind: "pairing".into(),
            dims: vec![p.a_dim(), p.b_dim()],
            matrices,
        }
    }

    pub fn from_mixed(m: &MixedDistributiveLaw) -> Self {
        let mut matrices = BTreeMap::new();
        matrices.insert("product".into(), linmap_to_matrix(m.monad().product()));
        matrices.insert("unit".into(), linmap_to_matrix(m.monad().unit()));
        matrices.insert("coproduct".into(), linmap_to_matrix(m.comonad().coproduct()));
        matrices.insert("counit".into(), linmap_to_matrix(m.comonad().counit()));
        matrices.insert("omega".into(), linmap_to_matrix(m.omega()));
        InstanceFile {
            ring: render_ring(m.ring()),
            kind: "mixed".into(),
            dims: vec![m.monad().dim(), m.comonad().dim()],
            matrices,
        }
    }

    pub fn from_entwining_module(e: &ModuleEntwining, inner: Option<&QUnitalAlgebra>) -> Self {
        let mut matrices = BTreeMap::new();
        matrices.insert("product_l".into(), linmap_to_matrix(e.target_monad().product()));
        matrices.insert("unit_l".into(), linmap_to_matrix(e.target_monad().unit()));
        matrices.insert("product_f".into(), linmap_to_matrix(e.source_monad().product()));
        matrices.insert("unit_f".into(), linmap_to_matrix(e.source_monad().unit()));
        matrices.insert("lambda".into(), linmap_to_matrix(e.lambda()));
        if let Some(t) = inner {
            matrices.insert("product_t".into(), linmap_to_matrix(t.product()));
            matrices.insert("unit_t".into(), linmap_to_matrix(t.unit()));
        }
        InstanceFile {
            ring: render_ring(e.ring()),
            kind: "entwining-module".into(),
            dims: vec![e.target_monad().dim(), e.source_monad().dim(), e.functor_dim()],
            matrices,
        }
    }

    pub fn from_entwining_comodule(
        e: &ComoduleEntwining,
        inner: Option<&QCounitalCoalgebra>,
    ) -> Self {
        let mut matrices = BTreeMap::new();
        matrices.insert("coproduct_g".into(), linmap_to_matrix(e.source_comonad().coproduct()));
        matrices.insert("counit_g".into(), linmap_to_matrix(e.source_comonad().counit()));
        matrices.insert("coproduct_h".into(), linmap_to_matrix(e.target_comonad().coproduct()));
        matrices.insert("counit_h".into(), linmap_to_matrix(e.target_comonad().counit()));
        matrices.insert("psi".into(), linmap_to_matrix(e.psi()));
        if let Some(t) = inner {
            matrices.insert("coproduct_t".into(), linmap_to_matrix(t.coproduct()));
            matrices.insert("counit_t".into(), linmap_to_matrix(t.counit()));
        }
        InstanceFile {
            ring: render_ring(e.ring()),
            kind: "entwining-comodule".into(),
            dims: vec![
                e.source_comonad().dim(),
                e.target_comonad().dim(),
                e.functor_dim(),
            ],
            matrices,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use pairlab::fixtures;

    #[test]
    fn ring_descriptors_round_trip() {
        for r in [ExactRing::Rationals, ExactRing::Zn(2), ExactRing::Zn(17)] {
            assert_eq!(parse_ring(&render_ring(r)).unwrap(), r);
        }
        assert!(parse_ring("Z1").is_err());
        assert!(parse_ring("GF4").is_err());
    }

    #[test]
    fn rational_entries_parse_and_render() {
        let m: Matrix = vec![vec![Value::String("1/2".into()), Value::from(3)]];
        let l = matrix_to_linmap(ExactRing::Rationals, 1, 2, &m, "t").unwrap();
        assert_eq!(l.get(0, 0).render(), "1/2");
        let back = linmap_to_matrix(&l);
        assert_eq!(back[0][0], Value::String("1/2".into()));
        assert_eq!(back[0][1], Value::String("3".into()));
    }

    #[test]
    fn fractions_rejected_over_zn() {
        let m: Matrix = vec![vec![Value::String("1/2".into())]];
        assert!(matrix_to_linmap(ExactRing::Zn(2), 1, 1, &m, "t").is_err());
    }

    #[test]
    fn algebra_file_round_trips() {
        let file = InstanceFile::from_algebra(&fixtures::i2());
        let text = serde_json::to_string(&file).unwrap();
        let back: InstanceFile = serde_json::from_str(&text).unwrap();
        assert_eq!(file, back);
        let Instance::Algebra(alg) = back.build().unwrap() else {
            panic!("wrong kind")
        };
        assert_eq!(alg.product(), fixtures::i2().product());
    }

    #[test]
    fn bad_dims_are_reported() {
        let mut file = InstanceFile::from_algebra(&fixtures::i2());
        file.dims = vec![3];
        assert!(file.build().is_err());
    }
}
