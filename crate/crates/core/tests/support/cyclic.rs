//! Cyclic-group oracle shared by the classical-degeneration tests and the acceptance run.
//! Expected matrices are computed from scratch with modular arithmetic on `Z/n`, independently
//! of the library's group and tensor code.

#![allow(dead_code)]

use homhopf::cleft::{cleft_to_crossed, crossed_to_cleft, group_quotient_comodule};
use homhopf::corpus::{extension_cleft, extension_system, hom_group_hopf, section};
use homhopf::crossed::crossed_product_unchecked;
use homhopf::galois::galois_map_ambient;
use homhopf::linalg::{Field, LinMap};

/// `Z/n ⊇ dZ/n`, with quotient `Z/d` and section `x̄ ↦ x` for `0 ≤ x < d`.
pub struct Cyclic {
    pub n: usize,
    pub d: usize,
}

impl Cyclic {
    pub fn sub_order(&self) -> usize {
        self.n / self.d
    }

    /// `N` element with local index `i` is `i·d`.
    pub fn sub(&self, i: usize) -> usize {
        i * self.d
    }

    pub fn sigma(&self, x: usize, y: usize) -> usize {
        // x + y − ((x + y) mod d), as a local index of N
        ((x + y - (x + y) % self.d) / self.d) % self.sub_order()
    }

    pub fn sub_inv(&self, i: usize) -> usize {
        (self.sub_order() - i) % self.sub_order()
    }

    /// `(a#x)(b#y) = (a + b + σ(x, y)) # (x + y mod d)` in local coordinates.
    pub fn product(&self, a: usize, x: usize, b: usize, y: usize) -> (usize, usize) {
        let m = self.sub_order();
        ((a + b + self.sigma(x, y)) % m, (x + y) % self.d)
    }

    /// `γ⁻¹(x) = σ(x⁻¹, x)⁻¹ # x⁻¹`.
    pub fn gamma_inv(&self, x: usize) -> (usize, usize) {
        let xi = (self.d - x) % self.d;
        (self.sub_inv(self.sigma(xi, x)), xi)
    }
}

pub type Check = Result<(), String>;

fn unit_column(m: &LinMap, col: usize) -> Result<usize, String> {
    let v = m.column(col);
    let nz: Vec<usize> = (0..v.len()).filter(|&i| !v[i].is_zero()).collect();
    if nz.len() != 1 || v[nz[0]] != m.field().one() {
        return Err(format!("column {col} is not a basis vector"));
    }
    Ok(nz[0])
}

fn expect(got: usize, want: usize, what: impl FnOnce() -> String) -> Check {
    if got == want {
        Ok(())
    } else {
        Err(format!("{}: got index {got}, expected {want}", what()))
    }
}

/// `(n, d, group, subgroup)`: `Z/n` over `Z/n ⊇ dZ/n`.
pub const FIXTURES: &[(usize, usize, &str, &str)] = &[
    (2, 2, "Z2", "1"),
    (3, 3, "Z3", "1"),
    (4, 2, "Z4", "{0,2}"),
    (6, 3, "Z6", "{0,3}"),
    (6, 2, "Z6", "{0,2,4}"),
];

fn err(e: homhopf::Error) -> String {
    e.to_string()
}

pub fn hopf_structure() -> Check {
    for n in [2usize, 3] {
        let h = hom_group_hopf(&format!("Z{n}"), "id", Field::Rational).map_err(err)?;
        for g in 0..n {
            for k in 0..n {
                expect(unit_column(h.algebra.mult(), g * n + k)?, (g + k) % n, || format!("kZ{n} product"))?;
            }
            expect(unit_column(h.coalgebra.comult(), g)?, g * n + g, || format!("kZ{n} coproduct"))?;
            expect(unit_column(&h.antipode, g)?, (n - g) % n, || format!("kZ{n} antipode"))?;
            if h.coalgebra.counit_basis(g) != &Field::Rational.one() {
                return Err(format!("kZ{n} counit"));
            }
        }
    }
    Ok(())
}

pub fn crossed_products() -> Check {
    for &(n, d, g, sub) in FIXTURES {
        let c = Cyclic { n, d };
        let s = extension_system(g, sub, "id", Field::Rational).map_err(err)?;
        let p = crossed_product_unchecked(&s);
        let m = c.sub_order();
        if p.dim() != m * d {
            return Err(format!("Z{n}/{sub}: product has dimension {}", p.dim()));
        }
        for a in 0..m {
            for x in 0..d {
                for b in 0..m {
                    for y in 0..d {
                        let (ab, xy) = c.product(a, x, b, y);
                        let col = (a * d + x) * (m * d) + (b * d + y);
                        expect(unit_column(p.mult(), col)?, ab * d + xy, || format!("Z{n}/{sub} product"))?;
                    }
                }
            }
        }
    }
    Ok(())
}

pub fn gamma_inverses() -> Check {
    for &(n, d, g, sub) in FIXTURES {
        let c = Cyclic { n, d };
        let s = extension_system(g, sub, "id", Field::Rational).map_err(err)?;
        let fwd = crossed_to_cleft(&s).map_err(err)?;
        for x in 0..d {
            let (a, xi) = c.gamma_inv(x);
            let what = || format!("Z{n}/{sub} γ⁻¹({x})");
            expect(unit_column(&fwd.closed_form_inverse, x)?, a * d + xi, what)?;
            expect(unit_column(&fwd.solver_inverse, x)?, a * d + xi, what)?;
            expect(unit_column(&fwd.cleft.gamma, x)?, x, || format!("Z{n}/{sub} γ({x})"))?;
        }
    }
    Ok(())
}

pub fn cleft_cocycles() -> Check {
    for &(n, d, g, sub) in FIXTURES {
        let c = Cyclic { n, d };
        let cd = extension_cleft(g, sub, "id", Field::Rational).map_err(err)?;
        for x in 0..d {
            expect(unit_column(&cd.gamma, x)?, x, || format!("Z{n}/{sub} γ({x})"))?;
            let (a, xi) = c.gamma_inv(x);
            expect(unit_column(&cd.gamma_inv, x)?, (c.sub(a) + xi) % n, || format!("Z{n}/{sub} γ⁻¹({x})"))?;
        }
        let back = cleft_to_crossed(&cd).map_err(err)?;
        for x in 0..d {
            for y in 0..d {
                expect(unit_column(&back.system.sigma, x * d + y)?, c.sigma(x, y), || {
                    format!("Z{n}/{sub} σ({x}, {y})")
                })?;
            }
        }
    }
    Ok(())
}

pub fn galois_maps() -> Check {
    for &(n, d, g, sub) in FIXTURES {
        let sec = section(g, sub, "id").map_err(err)?;
        let comod = group_quotient_comodule(sec.quotient(), Field::Rational).map_err(err)?;
        let phi = galois_map_ambient(&comod);
        // g ⊗ h ↦ gh ⊗ h̄
        for x in 0..n {
            for y in 0..n {
                expect(unit_column(&phi, x * n + y)?, ((x + y) % n) * d + y % d, || {
                    format!("Z{n}/{sub} Galois map")
                })?;
            }
        }
    }
    Ok(())
}

pub fn all() -> Check {
    hopf_structure()?;
    crossed_products()?;
    gamma_inverses()?;
    cleft_cocycles()?;
    galois_maps()
}
