//! Unitary representations of a subgroup: explicit matrices keyed by
//! group element, with homomorphism and unitarity validation. Sign
//! characters come from index-2 subgroups; 2-dimensional representations
//! from dihedral structure or conjugate character pairs on cyclic groups.

use num_complex::Complex64;

use super::group::{FiniteGroupModel, SubgroupEmbedding};
use super::TfError;

/// A finite-dimensional unitary representation of the subgroup Γ; one
/// matrix (row-major, dim×dim) per Γ-element, indexed by position in the
/// sorted element list of the embedding.
#[derive(Debug, Clone)]
pub struct UnitaryRepOmega {
    pub dim: usize,
    mats: Vec<Vec<Complex64>>,
    pub label: String,
}

impl UnitaryRepOmega {
    pub fn matrix(&self, local_idx: usize) -> &[Complex64] {
        &self.mats[local_idx]
    }

    pub fn trace(&self, local_idx: usize) -> Complex64 {
        let m = &self.mats[local_idx];
        (0..self.dim).map(|i| m[i * self.dim + i]).sum()
    }

    /// ω(γ₁γ₂) = ω(γ₁)ω(γ₂), ω(e) = I, and unitarity, all within `tol`.
    pub fn validate(
        &self,
        g: &FiniteGroupModel,
        sub: &SubgroupEmbedding,
        tol: f64,
    ) -> Result<(), TfError> {
        let n = sub.elements.len();
        let d = self.dim;
        if self.mats.len() != n {
            return Err(TfError::InvalidRep("matrix count != subgroup order".into()));
        }
        let local = |x: usize| sub.elements.binary_search(&x).expect("closed subgroup");
        let e_local = local(g.identity());
        for (i, val) in self.mats[e_local].iter().enumerate() {
            let want = if i / d == i % d { 1.0 } else { 0.0 };
            if (val - Complex64::new(want, 0.0)).norm() > tol {
                return Err(TfError::InvalidRep("omega(identity) != I".into()));
            }
        }
        for (ai, &a) in sub.elements.iter().enumerate() {
            // unitarity: M M† = I
            let m = &self.mats[ai];
            for i in 0..d {
                for j in 0..d {
                    let dot: Complex64 =
                        (0..d).map(|k| m[i * d + k] * m[j * d + k].conj()).sum();
                    let want = if i == j { 1.0 } else { 0.0 };
                    if (dot - Complex64::new(want, 0.0)).norm() > tol {
                        return Err(TfError::InvalidRep(format!(
                            "omega({a}) is not unitary within {tol}"
                        )));
                    }
                }
            }
            for (bi, &b) in sub.elements.iter().enumerate() {
                let ci = local(g.mul(a, b));
                for i in 0..d {
                    for j in 0..d {
                        let prod: Complex64 = (0..d)
                            .map(|k| self.mats[ai][i * d + k] * self.mats[bi][k * d + j])
                            .sum();
                        if (prod - self.mats[ci][i * d + j]).norm() > tol {
                            return Err(TfError::InvalidRep(format!(
                                "omega({a}·{b}) != omega({a})omega({b})"
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn trivial(sub: &SubgroupEmbedding) -> UnitaryRepOmega {
        UnitaryRepOmega {
            dim: 1,
            mats: vec![vec![Complex64::new(1.0, 0.0)]; sub.elements.len()],
            label: "trivial".into(),
        }
    }

    /// ±1 characters: one per index-2 subgroup of Γ (χ = 1 on the
    /// subgroup, -1 off it). Empty when Γ has no subgroup of index 2.
    pub fn sign_characters(g: &FiniteGroupModel, sub: &SubgroupEmbedding) -> Vec<UnitaryRepOmega> {
        let (model, map) = sub.as_model(g);
        let half = model.order() / 2;
        if model.order() % 2 != 0 {
            return vec![];
        }
        let mut out = Vec::new();
        for h in model.subgroups() {
            if h.len() != half {
                continue;
            }
            let in_h = |local: usize| h.binary_search(&local).is_ok();
            let mats: Vec<Vec<Complex64>> = (0..model.order())
                .map(|l| vec![Complex64::new(if in_h(l) { 1.0 } else { -1.0 }, 0.0)])
                .collect();
            out.push(UnitaryRepOmega {
                dim: 1,
                mats,
                label: format!("sign[{}]", h.iter().map(|&l| map[l].to_string()).collect::<Vec<_>>().join(",")),
            });
        }
        out
    }

    /// A 2-dimensional unitary representation where the structure offers
    /// one: the rotation/reflection representation for dihedral Γ, or a
    /// conjugate pair of characters for cyclic Γ of order ≥ 3.
    pub fn two_dimensional(
        g: &FiniteGroupModel,
        sub: &SubgroupEmbedding,
    ) -> Option<UnitaryRepOmega> {
        let (model, _) = sub.as_model(g);
        let n = model.order();
        // cyclic: diag(ζ^k, conj)
        if let Some(gen) = (0..n).find(|&x| model.element_order(x) == n) {
            if n >= 3 {
                let tau = std::f64::consts::TAU / n as f64;
                let mut mats = vec![Vec::new(); n];
                let mut x = model.identity();
                for k in 0..n {
                    let z = Complex64::from_polar(1.0, tau * k as f64);
                    let zero = Complex64::new(0.0, 0.0);
                    mats[x] = vec![z, zero, zero, z.conj()];
                    x = model.mul(x, gen);
                }
                return Some(UnitaryRepOmega { dim: 2, mats, label: "2dim-cyclic".into() });
            }
            return None;
        }
        // dihedral: r of order m ≥ 3 with index-2 cyclic ⟨r⟩ and a flip
        let m = n / 2;
        if n % 2 != 0 || m < 3 {
            return None;
        }
        let r = (0..n).find(|&x| model.element_order(x) == m && {
            let rot = model.generated_subgroup(&[x]);
            rot.len() == m
        })?;
        let rot = model.generated_subgroup(&[r]);
        let s = (0..n).find(|&x| rot.binary_search(&x).is_err() && model.element_order(x) == 2)?;
        // require s r s^{-1} = r^{-1}
        if model.conj(r, s) != model.inv(r) {
            return None;
        }
        let tau = std::f64::consts::TAU / m as f64;
        // r^k ↦ R(kτ); s·r^k ↦ S·R(kτ) with S = diag(1,-1)
        let mut mats = vec![Vec::new(); n];
        let mut x = model.identity();
        for k in 0..m {
            let (c, si) = ((tau * k as f64).cos(), (tau * k as f64).sin());
            mats[x] = vec![
                Complex64::new(c, 0.0),
                Complex64::new(-si, 0.0),
                Complex64::new(si, 0.0),
                Complex64::new(c, 0.0),
            ];
            let sx = model.mul(s, x);
            // reflection matrix S = [[1,0],[0,-1]]; S·R(θ)
            mats[sx] = vec![
                Complex64::new(c, 0.0),
                Complex64::new(-si, 0.0),
                Complex64::new(-si, 0.0),
                Complex64::new(-c, 0.0),
            ];
            x = model.mul(x, r);
        }
        if mats.iter().any(Vec::is_empty) {
            return None;
        }
        Some(UnitaryRepOmega { dim: 2, mats, label: "2dim-dihedral".into() })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d4_with_itself() -> (FiniteGroupModel, SubgroupEmbedding) {
        let g = FiniteGroupModel::dihedral(4);
        let all: Vec<usize> = (0..g.order()).collect();
        let sub = SubgroupEmbedding::new(&g, all).unwrap();
        (g, sub)
    }

    #[test]
    fn trivial_rep_validates() {
        let (g, sub) = d4_with_itself();
        let omega = UnitaryRepOmega::trivial(&sub);
        omega.validate(&g, &sub, 1e-12).unwrap();
    }

    #[test]
    fn sign_characters_of_d4() {
        let (g, sub) = d4_with_itself();
        let signs = UnitaryRepOmega::sign_characters(&g, &sub);
        assert_eq!(signs.len(), 3, "D4 has three index-2 subgroups");
        for s in &signs {
            s.validate(&g, &sub, 1e-12).unwrap();
        }
    }

    #[test]
    fn two_dim_dihedral_validates() {
        let (g, sub) = d4_with_itself();
        let omega = UnitaryRepOmega::two_dimensional(&g, &sub).expect("D4 has a 2-dim rep");
        omega.validate(&g, &sub, 1e-12).unwrap();
        // character of the rotation by π/2 is 0
        let r_local = 1;
        assert!((omega.trace(r_local)).norm() < 1e-12);
    }

    #[test]
    fn two_dim_cyclic_validates() {
        let g = FiniteGroupModel::cyclic(5);
        let sub = SubgroupEmbedding::new(&g, (0..5).collect()).unwrap();
        let omega = UnitaryRepOmega::two_dimensional(&g, &sub).expect("C5 pair rep");
        omega.validate(&g, &sub, 1e-12).unwrap();
        assert_eq!(omega.dim, 2);
    }

    #[test]
    fn sign_of_s4_is_the_parity_character() {
        let g = FiniteGroupModel::symmetric(4);
        let sub = SubgroupEmbedding::new(&g, (0..24).collect()).unwrap();
        let signs = UnitaryRepOmega::sign_characters(&g, &sub);
        assert_eq!(signs.len(), 1, "S4 has exactly one index-2 subgroup (A4)");
        signs[0].validate(&g, &sub, 1e-12).unwrap();
    }
}
