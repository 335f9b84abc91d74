use serde::{Deserialize, Serialize};

use crate::algebra::{
    first_irreducible, format_poly, parse_poly, BaseField, Field, Poly, QuotientRing,
};
use crate::rootdata::{classify_pair, CartanMatrix};
use crate::HdxError;

/// How an instance is checked: by enumerating the whole group, or at the
/// level of local subgroups and one link per cotype.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Explicit,
    Certificate,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Self::Explicit => "explicit",
            Self::Certificate => "certificate",
        }
    }
}

/// Textual instance description, as given on the command line or stored in
/// a bundle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceText {
    pub preset: Option<String>,
    pub gcm: Option<Vec<Vec<i64>>>,
    pub p: u64,
    pub m: usize,
    pub f: String,
}

/// A resolved instance: diagram, coefficient field `k = F_{p^m}` and
/// quotient modulus `f` over `k`.
#[derive(Debug, Clone)]
pub struct Instance {
    pub text: InstanceText,
    pub gcm: CartanMatrix,
    pub k: BaseField,
    pub f: Poly,
    /// `n` when the diagram is `A~n`, which has a matrix model.
    pub affine_a: Option<usize>,
}

impl Instance {
    pub fn resolve(text: InstanceText) -> Result<Self, HdxError> {
        let gcm = match (&text.preset, &text.gcm) {
            (Some(name), None) => CartanMatrix::preset(name)?,
            (None, Some(rows)) => CartanMatrix::new(rows.clone())?,
            _ => {
                return Err(HdxError::Spec(
                    "give exactly one of --preset and --gcm".into(),
                ))
            }
        };
        let n = gcm.size();
        if n < 3 {
            return Err(HdxError::Spec("the diagram needs at least 3 nodes".into()));
        }
        for i in 0..n {
            for j in i + 1..n {
                classify_pair(&gcm, i, j)?;
            }
        }
        let d = n - 1;
        if gcm.is_finite_type(gcm.nodes())
            || !gcm.is_k_spherical(d)
            || !gcm.is_purely_k_spherical(d)
        {
            return Err(HdxError::Spec(format!(
                "the diagram must be non-spherical, {d}-spherical and purely {d}-spherical"
            )));
        }
        if text.m == 0 {
            return Err(HdxError::Spec(
                "extension degree m must be at least 1".into(),
            ));
        }
        let k = BaseField::with_default_modulus(text.p, text.m)?;
        let f = match text.f.strip_prefix("auto:") {
            Some(deg) => {
                let deg: usize = deg
                    .parse()
                    .map_err(|_| HdxError::Spec(format!("bad degree in {:?}", text.f)))?;
                first_irreducible(&k, deg)
                    .ok_or_else(|| HdxError::Spec("auto:<degree> needs degree >= 1".into()))?
            }
            None => parse_poly(&text.f, &k)?,
        };
        // validates irreducibility and size
        QuotientRing::new(k.clone(), f.clone())?;
        let affine_a = CartanMatrix::preset(&format!("A~{}", n - 1))
            .ok()
            .filter(|a| a == &gcm)
            .map(|_| n - 1);
        Ok(Self {
            text,
            gcm,
            k,
            f,
            affine_a,
        })
    }

    pub fn d(&self) -> usize {
        self.gcm.size() - 1
    }

    pub fn q(&self) -> u64 {
        self.k.order()
    }

    pub fn deg_f(&self) -> usize {
        self.f.degree().unwrap_or(0)
    }

    pub fn g_text(&self) -> String {
        format_poly(self.k.modulus(), 'x')
    }

    pub fn f_text(&self) -> String {
        format_poly(&self.f, 't')
    }

    /// Key-value pairs recorded in complex files.
    pub fn params(&self) -> Vec<(String, String)> {
        let mut out = Vec::new();
        match (&self.text.preset, &self.text.gcm) {
            (Some(p), _) => out.push(("preset".into(), p.clone())),
            (_, Some(rows)) => out.push((
                "gcm".into(),
                serde_json::to_string(rows).expect("integer matrix serializes"),
            )),
            _ => {}
        }
        out.push(("p".into(), self.text.p.to_string()));
        out.push(("m".into(), self.text.m.to_string()));
        out.push(("g".into(), self.g_text()));
        out.push(("f".into(), self.f_text()));
        out
    }

    /// Inverse of [`Instance::params`].
    pub fn from_params(params: &[(String, String)]) -> Result<Self, HdxError> {
        let get = |k: &str| {
            params
                .iter()
                .find(|(key, _)| key == k)
                .map(|(_, v)| v.clone())
        };
        let need =
            |k: &str| get(k).ok_or_else(|| HdxError::Spec(format!("complex file lacks param {k}")));
        let gcm = match get("gcm") {
            Some(json) => Some(serde_json::from_str(&json)?),
            None => None,
        };
        let text = InstanceText {
            preset: get("preset"),
            gcm,
            p: need("p")?
                .parse()
                .map_err(|_| HdxError::Spec("bad p".into()))?,
            m: need("m")?
                .parse()
                .map_err(|_| HdxError::Spec("bad m".into()))?,
            f: need("f")?,
        };
        let inst = Self::resolve(text)?;
        if let Some(g) = get("g") {
            if g != inst.g_text() {
                return Err(HdxError::Spec(format!(
                    "complex was built over F_p[x]/({g}), not the default modulus {}",
                    inst.g_text()
                )));
            }
        }
        Ok(inst)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn text(preset: &str, p: u64, m: usize, f: &str) -> InstanceText {
        InstanceText {
            preset: Some(preset.into()),
            gcm: None,
            p,
            m,
            f: f.into(),
        }
    }

    #[test]
    fn resolves_auto_modulus() {
        let inst = Instance::resolve(text("A~2", 2, 1, "auto:2")).unwrap();
        assert_eq!(inst.f_text(), "t^2+t+1");
        assert_eq!(inst.affine_a, Some(2));
        assert_eq!(inst.q(), 2);
        let g2 = Instance::resolve(text("G~2", 5, 1, "auto:2")).unwrap();
        assert_eq!(g2.affine_a, None);
    }

    #[test]
    fn rejects_reducible_f() {
        let err = Instance::resolve(text("A~2", 2, 1, "t^2+1")).unwrap_err();
        assert!(err.to_string().contains("t+1"), "{err}");
        assert_eq!(err.exit_code(), 4);
    }

    #[test]
    fn params_round_trip() {
        let inst = Instance::resolve(text("A~3", 3, 1, "1,0,1")).unwrap();
        let back = Instance::from_params(&inst.params()).unwrap();
        assert_eq!(back.f, inst.f);
        assert_eq!(back.gcm, inst.gcm);
    }

    #[test]
    fn rejects_spherical_diagrams() {
        let t = InstanceText {
            preset: None,
            gcm: Some(vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]]),
            p: 2,
            m: 1,
            f: "auto:2".into(),
        };
        assert!(matches!(Instance::resolve(t), Err(HdxError::Spec(_))));
    }
}
