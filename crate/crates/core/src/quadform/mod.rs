//! The quadratic map `q: V -> W` attached to `H_n^eps`, where `V = G/A` is
//! elementary abelian of rank 4 (images of `x_1..x_4`), `W = A/B` is
//! `(Z/2)[t]/(t^2)` with `z -> 1`, `y_1 -> t`, and `q(xA) = x^2 B`.
//!
//! Two parameter vectors give isomorphic groups only if their quadratic maps
//! are pseudo-isometric: some `g` in GL(4,2) and `h` in GL(2,2) intertwine
//! both `q` and its polarization `b`.

mod gf2;
mod w;

use std::fmt;

use rayon::prelude::*;

pub use gf2::{gl4, GF2Matrix2, GF2Matrix4};
pub use w::WElem;

use crate::families::{x, y, Epsilon, Z};
use crate::pc::PcPresentation;

/// An upper-triangular 4x4 matrix over W representing `q(v) = v Q v^T`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct QuadMatrix {
    entries: [[WElem; 4]; 4],
}

impl QuadMatrix {
    pub fn entries(&self) -> &[[WElem; 4]; 4] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> WElem {
        self.entries[i][j]
    }

    /// `B = Q + Q^T`, the Gram matrix of the polarization.
    pub fn bilinear(&self) -> [[WElem; 4]; 4] {
        let mut b = [[WElem::ZERO; 4]; 4];
        for (i, row) in b.iter_mut().enumerate() {
            for (j, e) in row.iter_mut().enumerate() {
                *e = self.entries[i][j] + self.entries[j][i];
            }
        }
        b
    }
}

impl fmt::Display for QuadMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.entries.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(|e| format!("{e:>3}")).collect();
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

pub fn quad_matrix(eps: Epsilon) -> QuadMatrix {
    let e = eps.bits();
    let mut q = [[WElem::ZERO; 4]; 4];
    for (i, row) in q.iter_mut().enumerate() {
        row[i] = WElem::new(e[i], 0);
    }
    q[0][1] = WElem::ONE;
    q[0][2] = WElem::T;
    q[0][3] = WElem::ONE;
    q[1][2] = WElem::ONE;
    QuadMatrix { entries: q }
}

/// `v Q v^T`, with `v[i]` the coefficient of the i-th basis vector.
pub fn eval_quad(q: &QuadMatrix, v: [u8; 4]) -> WElem {
    let mut acc = WElem::ZERO;
    for i in 0..4 {
        for j in 0..4 {
            acc = acc + q.entries[i][j].scale(v[i] & v[j] & 1);
        }
    }
    acc
}

/// `v B u^T` for a Gram matrix `B` over W.
pub fn eval_bilinear(b: &[[WElem; 4]; 4], u: [u8; 4], v: [u8; 4]) -> WElem {
    let mut acc = WElem::ZERO;
    for i in 0..4 {
        for j in 0..4 {
            acc = acc + b[i][j].scale(u[i] & v[j] & 1);
        }
    }
    acc
}

/// The 16 vectors of V, in increasing order of the bit pattern `v_1 v_2 v_3 v_4`.
pub fn vectors() -> impl Iterator<Item = [u8; 4]> {
    (0u8..16).map(|c| [c >> 3 & 1, c >> 2 & 1, c >> 1 & 1, c & 1])
}

/// The map on W compatible with `g` on polarization values:
/// `(g B^delta g^T)_{kl} = h(B^eps_{kl})` for all `k, l`.
///
/// `h` is solved from two entries of `B^eps` spanning W and then verified on
/// all sixteen entries; `None` if the system has no invertible solution.
pub fn induced_h(g: &GF2Matrix4, eps: Epsilon, delta: Epsilon) -> Option<GF2Matrix2> {
    let b_eps = quad_matrix(eps).bilinear();
    let target = g.congruence(&quad_matrix(delta).bilinear());
    let cells = || (0..4).flat_map(|k| (0..4).map(move |l| (k, l)));

    let h = match spanning_pair(&b_eps) {
        Some(((k1, l1), (k2, l2))) => {
            let (u1, u2) = (b_eps[k1][l1], b_eps[k2][l2]);
            let (m1, m2) = (target[k1][l1], target[k2][l2]);
            // h [u1 u2] = [m1 m2], so h = [m1 m2] [u1 u2]^{-1}
            let u = GF2Matrix2::from_images(u1, u2);
            let inv = GF2Matrix2 {
                m: [[u.m[1][1], u.m[0][1]], [u.m[1][0], u.m[0][0]]],
            };
            let m = GF2Matrix2::from_images(m1, m2);
            GF2Matrix2::from_images(m.apply(inv.apply(WElem::ONE)), m.apply(inv.apply(WElem::T)))
        }
        // b does not determine h; take the least invertible solution
        None => GF2Matrix2::all()
            .filter(GF2Matrix2::is_invertible)
            .find(|h| cells().all(|(k, l)| h.apply(b_eps[k][l]) == target[k][l]))?,
    };
    let compatible = cells().all(|(k, l)| h.apply(b_eps[k][l]) == target[k][l]);
    (compatible && h.is_invertible()).then_some(h)
}

fn spanning_pair(b: &[[WElem; 4]; 4]) -> Option<((usize, usize), (usize, usize))> {
    let cells: Vec<(usize, usize)> = (0..4)
        .flat_map(|k| (0..4).map(move |l| (k, l)))
        .filter(|&(k, l)| !b[k][l].is_zero())
        .collect();
    for (i, &c1) in cells.iter().enumerate() {
        for &c2 in &cells[i + 1..] {
            if b[c1.0][c1.1] != b[c2.0][c2.1] {
                return Some((c1, c2));
            }
        }
    }
    None
}

/// A pseudo-isometry from `q^eps` to `q^delta`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PseudoIsometry {
    pub g: GF2Matrix4,
    pub h: GF2Matrix2,
}

/// Checks both intertwining conditions for a given `g`: compatibility with
/// the polarizations (which fixes `h`) and `(g Q^delta g^T)_{ii} = h(eps_i)`
/// on the basis vectors.
pub fn check_witness(g: &GF2Matrix4, eps: Epsilon, delta: Epsilon) -> Option<GF2Matrix2> {
    let h = induced_h(g, eps, delta)?;
    let qd = g.congruence(quad_matrix(delta).entries());
    let e = eps.bits();
    (0..4)
        .all(|i| qd[i][i] == h.apply(WElem::new(e[i], 0)))
        .then_some(h)
}

/// The least `g` in GL(4,2) (by row-major bit pattern) witnessing a
/// pseudo-isometry from `q^eps` to `q^delta`.
pub fn pseudo_isometric(eps: Epsilon, delta: Epsilon) -> Option<PseudoIsometry> {
    gl4()
        .par_iter()
        .find_first(|g| check_witness(g, eps, delta).is_some())
        .map(|&g| PseudoIsometry {
            g,
            h: check_witness(&g, eps, delta).expect("witness just found"),
        })
}

/// One class of the sixteen parameter vectors, with a witness from the
/// representative to each member.
#[derive(Clone, Debug)]
pub struct EpsilonClass {
    pub representative: Epsilon,
    pub members: Vec<(Epsilon, PseudoIsometry)>,
}

/// Partition of all sixteen parameter vectors under pseudo-isometry.
/// Representatives are the least vectors of their classes and classes are
/// listed in increasing order of representative.
pub fn classify_epsilons() -> Vec<EpsilonClass> {
    let mut classes: Vec<EpsilonClass> = Vec::new();
    let mut assigned = [false; 16];
    let all: Vec<Epsilon> = Epsilon::all().collect();
    for (i, &rep) in all.iter().enumerate() {
        if assigned[i] {
            continue;
        }
        let members: Vec<(Epsilon, PseudoIsometry)> = all
            .par_iter()
            .enumerate()
            .filter(|&(j, _)| j >= i && !assigned[j])
            .filter_map(|(_, &d)| pseudo_isometric(rep, d).map(|w| (d, w)))
            .collect();
        for (d, _) in &members {
            assigned[eps_index(*d)] = true;
        }
        classes.push(EpsilonClass {
            representative: rep,
            members,
        });
    }
    classes
}

fn eps_index(e: Epsilon) -> usize {
    e.bits().iter().fold(0, |acc, &b| acc << 1 | b as usize)
}

// an element of A read in A/B = W through its z and y_1 exponents
fn to_w(pres: &PcPresentation, exps: &[u8]) -> WElem {
    debug_assert!(pres.ngens() > y(1));
    WElem::new(exps[Z], exps[y(1)])
}

fn lift(pres: &PcPresentation, v: [u8; 4]) -> crate::pc::NormalWord {
    let mut exps = vec![0u8; pres.ngens()];
    for (j, &bit) in v.iter().enumerate() {
        exps[x(j + 1)] = bit;
    }
    crate::pc::NormalWord::from_exponents(exps)
}

/// `q(v) = x_v^2 B` computed by collection in a family presentation.
pub fn group_quad(pres: &PcPresentation, v: [u8; 4]) -> WElem {
    let a = lift(pres, v);
    to_w(pres, pres.power(&a, 2).exponents())
}

/// `b(u, v) = [x_u, x_v] B` computed by collection in a family presentation.
pub fn group_bilinear(pres: &PcPresentation, u: [u8; 4], v: [u8; 4]) -> WElem {
    let c = pres.commutator(&lift(pres, u), &lift(pres, v));
    to_w(pres, c.exponents())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{build_family, FamilySpec};

    fn eps(s: &str) -> Epsilon {
        s.parse().unwrap()
    }

    #[test]
    fn displayed_matrix() {
        let q = quad_matrix(eps("0000"));
        for i in 0..4 {
            assert_eq!(q.get(i, i), WElem::ZERO);
            for j in 0..i {
                assert_eq!(q.get(i, j), WElem::ZERO);
            }
        }
        assert_eq!(q.get(0, 1), WElem::ONE);
        assert_eq!(q.get(0, 2), WElem::T);
        assert_eq!(q.get(0, 3), WElem::ONE);
        assert_eq!(q.get(1, 2), WElem::ONE);
        assert_eq!(q.get(1, 3), WElem::ZERO);
        assert_eq!(q.get(2, 3), WElem::ZERO);
        let q = quad_matrix(eps("1111"));
        assert!((0..4).all(|i| q.get(i, i) == WElem::ONE));
        for e in Epsilon::all() {
            let b = quad_matrix(e).bilinear();
            assert!((0..4).all(|i| b[i][i].is_zero()));
        }
    }

    #[test]
    fn evaluation_examples() {
        assert_eq!(eval_quad(&quad_matrix(eps("1111")), [0; 4]), WElem::ZERO);
        assert_eq!(eval_quad(&quad_matrix(eps("0000")), [1, 0, 1, 0]), WElem::T);
        assert_eq!(
            eval_quad(&quad_matrix(eps("0100")), [0, 1, 0, 0]),
            WElem::ONE
        );
    }

    #[test]
    fn identity_induces_identity() {
        for e in Epsilon::all() {
            assert_eq!(
                induced_h(&GF2Matrix4::IDENTITY, e, e),
                Some(GF2Matrix2::IDENTITY)
            );
            assert_eq!(
                check_witness(&GF2Matrix4::IDENTITY, e, e),
                Some(GF2Matrix2::IDENTITY)
            );
        }
    }

    #[test]
    fn induced_h_matches_brute_force_over_gl2() {
        let gl2: Vec<GF2Matrix2> = GF2Matrix2::all()
            .filter(GF2Matrix2::is_invertible)
            .collect();
        let reps = Epsilon::representatives();
        for g in gl4().iter().step_by(97) {
            for &e in &reps {
                for &d in &reps {
                    let be = quad_matrix(e).bilinear();
                    let target = g.congruence(&quad_matrix(d).bilinear());
                    let brute: Vec<GF2Matrix2> = gl2
                        .iter()
                        .copied()
                        .filter(|h| {
                            (0..4).all(|k| (0..4).all(|l| h.apply(be[k][l]) == target[k][l]))
                        })
                        .collect();
                    assert!(brute.len() <= 1);
                    assert_eq!(induced_h(g, e, d), brute.first().copied());
                }
            }
        }
    }

    #[test]
    fn swapping_e2_e4() {
        // rows of g are the images of the basis vectors
        let g = GF2Matrix4::from_rows([[1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0], [0, 1, 0, 0]]);
        let (e, d) = (eps("0100"), eps("0001"));
        let be = quad_matrix(e).bilinear();
        let target = g.congruence(&quad_matrix(d).bilinear());
        // b(e_2, e_3) = 1 would have to map to b(e_4, e_3) = 0
        assert_eq!(be[1][2], WElem::ONE);
        assert_eq!(target[1][2], WElem::ZERO);
        assert_eq!(induced_h(&g, e, d), None);
    }

    #[test]
    fn group_side_matches_matrix() {
        for e in Epsilon::all() {
            let pres = build_family(FamilySpec::new(2, e).unwrap());
            let q = quad_matrix(e);
            let b = q.bilinear();
            for u in vectors() {
                assert_eq!(group_quad(&pres, u), eval_quad(&q, u), "eps {e} v {u:?}");
                for v in vectors() {
                    let sum = [u[0] ^ v[0], u[1] ^ v[1], u[2] ^ v[2], u[3] ^ v[3]];
                    let bg = group_bilinear(&pres, u, v);
                    assert_eq!(
                        bg,
                        group_quad(&pres, sum) + group_quad(&pres, u) + group_quad(&pres, v)
                    );
                    assert_eq!(bg, eval_bilinear(&b, u, v));
                }
            }
        }
    }

    #[test]
    fn zero_and_second_representative_inequivalent() {
        assert!(pseudo_isometric(eps("0000"), eps("0100")).is_none());
        let w = pseudo_isometric(eps("0110"), eps("0110")).unwrap();
        assert_eq!(check_witness(&w.g, eps("0110"), eps("0110")), Some(w.h));
    }
}
