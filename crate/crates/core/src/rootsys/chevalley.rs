//! Structure constants of a Chevalley basis, signs fixed by extraspecial pairs.

use std::collections::HashMap;

use num::rational::Ratio;
use num::Zero;

use super::{eps_ip, RootSystem};

/// `[e_α, e_β] = N_{α,β} e_{α+β}` for all roots α, β.
///
/// Roots are indexed `0..N` for the positive roots (in the root system's order)
/// and `N..2N` for their negatives.
#[derive(Clone, Debug)]
pub struct ChevalleyData {
    pub num_positive: usize,
    coeffs: Vec<Vec<i64>>,
    norms: Vec<i64>,
    index: HashMap<Vec<i64>, usize>,
    /// Extraspecial pair of each non-simple positive root.
    pub extraspecial: HashMap<usize, (usize, usize)>,
    table: HashMap<(usize, usize), i64>,
}

impl ChevalleyData {
    pub fn new(rs: &RootSystem) -> ChevalleyData {
        let np = rs.positive_roots.len();
        let mut coeffs: Vec<Vec<i64>> = rs.positive_roots.iter().map(|r| r.coeffs.clone()).collect();
        coeffs.extend(rs.positive_roots.iter().map(|r| r.coeffs.iter().map(|c| -c).collect::<Vec<_>>()));
        let norms: Vec<i64> = (0..2 * np)
            .map(|i| {
                let e = &rs.positive_roots[i % np].eps;
                eps_ip(rs.family, e, e)
            })
            .collect();
        let index: HashMap<Vec<i64>, usize> = coeffs.iter().cloned().enumerate().map(|(i, c)| (c, i)).collect();

        let mut extraspecial = HashMap::new();
        for xi in 0..np {
            if rs.positive_roots[xi].height() == 1 {
                continue;
            }
            for a in 0..np {
                let diff: Vec<i64> = coeffs[xi].iter().zip(&coeffs[a]).map(|(x, y)| x - y).collect();
                if let Some(&b) = index.get(&diff) {
                    if b < np {
                        extraspecial.insert(xi, (a, b));
                        break;
                    }
                }
            }
        }
        let mut data = ChevalleyData {
            num_positive: np,
            coeffs,
            norms,
            index,
            extraspecial,
            table: HashMap::new(),
        };
        for a in 0..2 * np {
            for b in 0..2 * np {
                if data.sum(a, b).is_some() {
                    let v = data.compute(a, b);
                    data.table.insert((a, b), v);
                }
            }
        }
        data
    }

    pub fn num_roots(&self) -> usize {
        2 * self.num_positive
    }

    pub fn coeffs(&self, r: usize) -> &[i64] {
        &self.coeffs[r]
    }

    pub fn neg(&self, r: usize) -> usize {
        (r + self.num_positive) % (2 * self.num_positive)
    }

    /// Index of `α+β` when it is a root.
    pub fn sum(&self, a: usize, b: usize) -> Option<usize> {
        let s: Vec<i64> = self.coeffs[a].iter().zip(&self.coeffs[b]).map(|(x, y)| x + y).collect();
        self.index.get(&s).copied()
    }

    /// Largest q with `β - qα` a root.
    pub fn string_down(&self, a: usize, b: usize) -> i64 {
        let mut q = 0;
        let mut cur = self.coeffs[b].clone();
        loop {
            for (c, x) in cur.iter_mut().zip(&self.coeffs[a]) {
                *c -= x;
            }
            if self.index.contains_key(&cur) {
                q += 1;
            } else {
                return q;
            }
        }
    }

    /// `N_{α,β}`; zero when `α+β` is not a root.
    pub fn n(&self, a: usize, b: usize) -> i64 {
        self.table.get(&(a, b)).copied().unwrap_or(0)
    }

    fn compute(&mut self, a: usize, b: usize) -> i64 {
        if let Some(&v) = self.table.get(&(a, b)) {
            return v;
        }
        let Some(s) = self.sum(a, b) else { return 0 };
        let np = self.num_positive;
        let (pa, pb) = (a < np, b < np);
        let v = if pa && pb {
            if a > b {
                -self.compute(b, a)
            } else {
                let (a1, b1) = self.extraspecial[&s];
                let top = self.string_down(a1, b1) + 1;
                if a == a1 {
                    top
                } else {
                    let na1 = self.neg(a1);
                    let nb1 = self.neg(b1);
                    let mut acc = Ratio::<i64>::zero();
                    if let Some(r) = self.sum(b, na1) {
                        let t = self.compute(b, na1) * self.compute(a, nb1);
                        acc += Ratio::new(t, self.norms[r]);
                    }
                    if let Some(r) = self.sum(a, na1) {
                        let t = self.compute(na1, a) * self.compute(b, nb1);
                        acc += Ratio::new(t, self.norms[r]);
                    }
                    let v = acc * Ratio::new(self.norms[s], top);
                    assert!(v.is_integer(), "non-integral structure constant");
                    v.to_integer()
                }
            }
        } else if !pa && !pb {
            -self.compute(self.neg(a), self.neg(b))
        } else if !pa {
            -self.compute(b, a)
        } else {
            let g = self.neg(s);
            let v = if s < np {
                // γ negative: N(α,β) = |γ|²/|α|² N(β,γ)
                Ratio::new(self.norms[g], self.norms[a]) * -self.compute(self.neg(b), self.neg(g))
            } else {
                // γ positive: N(α,β) = |γ|²/|β|² N(γ,α)
                Ratio::new(self.norms[g], self.norms[b]) * self.compute(g, a)
            };
            assert!(v.is_integer(), "non-integral structure constant");
            v.to_integer()
        };
        self.table.insert((a, b), v);
        v
    }
}

#[cfg(test)]
mod tests {
    use crate::rootsys::{root_system, Family};

    const CASES: [(Family, usize); 7] = [
        (Family::A, 2),
        (Family::A, 3),
        (Family::B, 2),
        (Family::B, 3),
        (Family::C, 3),
        (Family::D, 4),
        (Family::C, 2),
    ];

    #[test]
    fn magnitudes_and_antisymmetry() {
        for (f, n) in CASES {
            let rs = root_system(f, n);
            let ch = rs.chevalley();
            for a in 0..ch.num_roots() {
                for b in 0..ch.num_roots() {
                    let v = ch.n(a, b);
                    assert_eq!(v, -ch.n(b, a));
                    if ch.sum(a, b).is_some() {
                        assert_eq!(v.abs(), ch.string_down(a, b) + 1, "{f}{n} {a} {b}");
                        assert_eq!(ch.n(ch.neg(a), ch.neg(b)), -v);
                    } else {
                        assert_eq!(v, 0);
                    }
                }
            }
            for (&xi, &(a, b)) in &ch.extraspecial {
                assert!(ch.n(a, b) > 0, "extraspecial sign at {xi}");
            }
        }
    }

    /// Build the bracket on root vectors and Cartan elements and check Jacobi.
    #[test]
    fn jacobi_identity() {
        for (f, n) in CASES {
            let rs = root_system(f, n);
            let ch = rs.chevalley();
            let nr = ch.num_roots();
            let np = ch.num_positive;
            // basis: e_r for r < nr, then h_i
            let dim = nr + n;
            let coroot = |r: usize| -> Vec<i64> {
                let c = &rs.positive_roots[r % np].coroot;
                if r < np {
                    c.clone()
                } else {
                    c.iter().map(|x| -x).collect()
                }
            };
            let fw = |r: usize| -> Vec<i64> {
                let c = &rs.positive_roots[r % np].fw;
                if r < np {
                    c.clone()
                } else {
                    c.iter().map(|x| -x).collect()
                }
            };
            let bracket_basis = |x: usize, y: usize| -> Vec<i64> {
                let mut out = vec![0; dim];
                match (x < nr, y < nr) {
                    (true, true) => {
                        if y == ch.neg(x) {
                            for (i, c) in coroot(x).into_iter().enumerate() {
                                out[nr + i] = c;
                            }
                        } else if let Some(s) = ch.sum(x, y) {
                            out[s] = ch.n(x, y);
                        }
                    }
                    (false, true) => out[y] = fw(y)[x - nr],
                    (true, false) => out[x] = -fw(x)[y - nr],
                    (false, false) => {}
                }
                out
            };
            let bracket = |u: &[i64], v: &[i64]| -> Vec<i64> {
                let mut out = vec![0; dim];
                for (i, &a) in u.iter().enumerate() {
                    if a == 0 {
                        continue;
                    }
                    for (j, &b) in v.iter().enumerate() {
                        if b == 0 {
                            continue;
                        }
                        for (o, c) in out.iter_mut().zip(bracket_basis(i, j)) {
                            *o += a * b * c;
                        }
                    }
                }
                out
            };
            let e = |i: usize| -> Vec<i64> {
                let mut v = vec![0; dim];
                v[i] = 1;
                v
            };
            for x in 0..nr {
                for y in 0..nr {
                    for z in 0..nr {
                        let t1 = bracket(&e(x), &bracket(&e(y), &e(z)));
                        let t2 = bracket(&e(y), &bracket(&e(z), &e(x)));
                        let t3 = bracket(&e(z), &bracket(&e(x), &e(y)));
                        for k in 0..dim {
                            assert_eq!(t1[k] + t2[k] + t3[k], 0, "{f}{n} jacobi at {x},{y},{z}");
                        }
                    }
                }
            }
        }
    }
}
