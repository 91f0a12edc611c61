#![allow(dead_code)]

use powerdec::decoder::tau_floor;
use powerdec::field::{Field, FieldCtx, FieldElement};
use powerdec::grs::{add_words, random_error, GrsCode};
use powerdec::matrix::{leading_position, shifted_degree, ShiftedPolyMatrix};
use powerdec::poly::Poly;
use rand::{Rng, RngCore};

/// One row of the reference simulation table.
#[derive(Debug, Clone, Copy)]
pub struct TableRow {
    pub p: u64,
    pub m: u32,
    pub n: usize,
    pub k: usize,
    pub s: usize,
    pub l: usize,
    pub radius: i64,
}

impl TableRow {
    pub fn field(&self) -> Field {
        FieldCtx::shared(self.p, self.m, None).unwrap()
    }

    pub fn code(&self) -> GrsCode {
        GrsCode::with_first_points(&self.field(), self.n, self.k).unwrap()
    }

    pub fn q(&self) -> u64 {
        self.p.pow(self.m)
    }

    pub fn tau_floor(&self) -> i64 {
        tau_floor(self.s as i64, self.l as i64, self.n as i64, self.k as i64)
    }

    pub fn label(&self) -> String {
        format!("[{},{}] GF({}) ({},{})", self.n, self.k, self.q(), self.s, self.l)
    }
}

pub const TABLE: [TableRow; 7] = [
    TableRow { p: 5, m: 2, n: 24, k: 7, s: 2, l: 4, radius: 10 },
    TableRow { p: 2, m: 5, n: 32, k: 9, s: 2, l: 3, radius: 13 },
    TableRow { p: 23, m: 1, n: 22, k: 3, s: 6, l: 18, radius: 14 },
    TableRow { p: 2, m: 6, n: 64, k: 29, s: 4, l: 5, radius: 19 },
    TableRow { p: 71, m: 1, n: 68, k: 31, s: 3, l: 4, radius: 20 },
    TableRow { p: 5, m: 3, n: 125, k: 51, s: 4, l: 6, radius: 42 },
    TableRow { p: 2, m: 8, n: 256, k: 63, s: 2, l: 4, radius: 116 },
];

pub fn words(v: &[u32]) -> Vec<FieldElement> {
    v.iter().map(|&x| FieldElement::from_raw(x)).collect()
}

pub fn worked_code() -> GrsCode {
    GrsCode::with_first_points(&FieldCtx::prime(23).unwrap(), 23, 7).unwrap()
}

pub const C3: [u32; 23] = [16, 15, 20, 20, 3, 0, 18, 0, 19, 16, 2, 11, 11, 3, 9, 18, 5, 0, 0, 0, 5, 0, 16];
pub const R3: [u32; 23] = [16, 0, 20, 20, 0, 0, 18, 0, 19, 0, 2, 11, 0, 0, 0, 0, 5, 0, 0, 0, 5, 0, 0];
pub const R4: [u32; 23] = [0, 2, 9, 1, 0, 0, 6, 0, 0, 0, 5, 0, 0, 0, 0, 0, 0, 4, 8, 15, 0, 0, 12];

pub fn random_element<R: RngCore>(f: &Field, rng: &mut R) -> FieldElement {
    FieldElement::from_raw(rng.gen_range(0..f.size()))
}

pub fn random_poly<R: RngCore>(f: &Field, max_deg: usize, rng: &mut R) -> Poly {
    let len = rng.gen_range(0..=max_deg + 1);
    Poly::from_coeffs(f, (0..len).map(|_| random_element(f, rng)).collect())
}

/// Sent message, sent codeword and received word at error weight `w`.
pub fn transmission<R: RngCore>(
    code: &GrsCode,
    w: usize,
    rng: &mut R,
) -> (Poly, Vec<FieldElement>, Vec<FieldElement>) {
    let msg = code.random_message(rng);
    let c = code.encode(&msg).unwrap();
    let e = random_error(code, w, rng).unwrap();
    let r = add_words(code.field(), &c, &e);
    (msg, c, r)
}

pub fn random_matrix<R: RngCore>(
    f: &Field,
    h: usize,
    w: usize,
    max_deg: usize,
    shift_range: i64,
    rng: &mut R,
) -> ShiftedPolyMatrix {
    let rows = (0..h)
        .map(|_| (0..w).map(|_| random_poly(f, max_deg, rng)).collect())
        .collect();
    let shifts = (0..w).map(|_| rng.gen_range(-shift_range..=shift_range)).collect();
    ShiftedPolyMatrix::new(f, rows, shifts).unwrap()
}

/// Determinant by cofactor expansion along the first row.
pub fn det(f: &Field, m: &[Vec<Poly>]) -> Poly {
    match m.len() {
        0 => Poly::one(f),
        1 => m[0][0].clone(),
        size => {
            let mut acc = Poly::zero(f);
            for j in 0..size {
                if m[0][j].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<Poly>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(c, _)| c != j)
                            .map(|(_, p)| p.clone())
                            .collect()
                    })
                    .collect();
                let term = m[0][j].mul(&det(f, &minor));
                acc = if j % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
            }
            acc
        }
    }
}

/// Row-space membership against a basis in weak Popov form, by repeated
/// cancellation of the leading term.
pub fn in_row_space(basis: &ShiftedPolyMatrix, v: &[Poly]) -> bool {
    assert!(basis.is_weak_popov());
    let shifts = basis.shifts();
    let lp = basis.lp_index();
    let mut v = v.to_vec();
    while let Some(pos) = leading_position(&v, shifts) {
        let Some(i) = lp.row(pos) else { return false };
        let b = basis.row(i);
        let (dv, db) = (v[pos].degree().unwrap(), b[pos].degree().unwrap());
        if dv < db {
            return false;
        }
        let f = basis.field();
        let c = f.div(v[pos].leading_coeff().unwrap(), b[pos].leading_coeff().unwrap()).unwrap();
        for (x, y) in v.iter_mut().zip(b) {
            x.sub_scaled_shifted(c, dv - db, y);
        }
    }
    true
}

/// `sum_i c_i * row_i` for random multipliers of bounded degree.
pub fn random_combination<R: RngCore>(m: &ShiftedPolyMatrix, max_deg: usize, rng: &mut R) -> Vec<Poly> {
    let f = m.field();
    let mut acc = vec![Poly::zero(f); m.width()];
    for row in m.rows() {
        let c = random_poly(f, max_deg, rng);
        for (a, p) in acc.iter_mut().zip(row) {
            *a = a.add(&c.mul(p));
        }
    }
    acc
}

pub fn row_sd(row: &[Poly], shifts: &[i64]) -> Option<i64> {
    shifted_degree(row, shifts)
}

/// Every codeword of a small code, flattened.
pub struct Codebook {
    n: usize,
    words: Vec<u32>,
}

impl Codebook {
    pub fn new(code: &GrsCode) -> Self {
        let f = code.field();
        let q = f.size() as u64;
        let total = q.pow(code.k() as u32);
        let mut words = Vec::with_capacity((total as usize) * code.n());
        for idx in 0..total {
            let mut v = idx;
            let coeffs = (0..code.k())
                .map(|_| {
                    let c = FieldElement::from_raw((v % q) as u32);
                    v /= q;
                    c
                })
                .collect();
            let cw = code.encode(&Poly::from_coeffs(f, coeffs)).unwrap();
            words.extend(cw.iter().map(|c| c.value()));
        }
        Codebook { n: code.n(), words }
    }

    pub fn len(&self) -> usize {
        self.words.len() / self.n
    }

    pub fn iter(&self) -> impl Iterator<Item = &[u32]> {
        self.words.chunks(self.n)
    }

    /// Smallest distance from `r` to any codeword.
    pub fn min_distance(&self, r: &[FieldElement]) -> usize {
        self.iter()
            .map(|c| c.iter().zip(r).filter(|(a, b)| **a != b.value()).count())
            .min()
            .unwrap()
    }
}
