//! Random physical states for validation sweeps.
//!
//! Both samplers draw from any `rand::Rng`, so a seeded generator makes the
//! 1000-state equivalence suites fully deterministic.

use std::f64::consts::TAU;

use rand::Rng;
use rand_distr::StandardNormal;

use crate::qmat::{DensityMatrix, Mat4, XState, C64};

/// A random standard-form state.
///
/// Diagonal from a flat simplex sample; each coherence drawn with uniform
/// magnitude inside its positivity disk (`|w| ≤ √(ad)`, `|z| ≤ √(bc)`) and a
/// uniform phase, so both concurrence branches and the separable region are
/// all well represented.
pub fn random_x_state<R: Rng + ?Sized>(rng: &mut R) -> XState {
    let mut cuts = [rng.gen::<f64>(), rng.gen::<f64>(), rng.gen::<f64>()];
    cuts.sort_by(f64::total_cmp);
    let (a, b, c, d) = (cuts[0], cuts[1] - cuts[0], cuts[2] - cuts[1], 1.0 - cuts[2]);
    let w = C64::from_polar(rng.gen::<f64>() * (a * d).sqrt(), rng.gen::<f64>() * TAU);
    let z = C64::from_polar(rng.gen::<f64>() * (b * c).sqrt(), rng.gen::<f64>() * TAU);
    XState::new(a, b, c, d, w, z).expect("sampled inside the physical region")
}

/// A random full-rank density matrix, `ρ = G G† / tr(G G†)` for a complex
/// Gaussian `G`. The product is assembled on the upper triangle and mirrored,
/// so the result is Hermitian to the last bit.
pub fn random_density_matrix<R: Rng + ?Sized>(rng: &mut R) -> DensityMatrix {
    let mut g = [[C64::new(0.0, 0.0); 4]; 4];
    for row in g.iter_mut() {
        for v in row.iter_mut() {
            *v = C64::new(rng.sample(StandardNormal), rng.sample(StandardNormal));
        }
    }
    let mut m = Mat4::zeros();
    for i in 0..4 {
        for j in i..4 {
            let mut acc = C64::new(0.0, 0.0);
            for (gik, gjk) in g[i].iter().zip(&g[j]) {
                acc += gik * gjk.conj();
            }
            m[(i, j)] = acc;
            if j > i {
                m[(j, i)] = acc.conj();
            }
        }
    }
    let m = m.scale(1.0 / m.trace().re);
    DensityMatrix::new(m).expect("a normalized Wishart matrix is a physical state")
}
