use std::fmt;
use std::sync::OnceLock;

use super::w::WElem;

/// A 4x4 matrix over GF(2). Row `i` is `rows[i]`, with column `j` in bit
/// `3 - j`, so that [`Self::code`] orders matrices lexicographically by
/// their row-major entries.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GF2Matrix4 {
    rows: [u8; 4],
}

impl GF2Matrix4 {
    pub const IDENTITY: GF2Matrix4 = GF2Matrix4 {
        rows: [0b1000, 0b0100, 0b0010, 0b0001],
    };

    pub fn from_code(code: u16) -> Self {
        GF2Matrix4 {
            rows: [
                (code >> 12) as u8 & 0xf,
                (code >> 8) as u8 & 0xf,
                (code >> 4) as u8 & 0xf,
                code as u8 & 0xf,
            ],
        }
    }

    pub fn code(&self) -> u16 {
        self.rows.iter().fold(0u16, |acc, &r| (acc << 4) | r as u16)
    }

    pub fn from_rows(rows: [[u8; 4]; 4]) -> Self {
        let mut out = [0u8; 4];
        for (i, row) in rows.iter().enumerate() {
            for (j, &bit) in row.iter().enumerate() {
                out[i] |= (bit & 1) << (3 - j);
            }
        }
        GF2Matrix4 { rows: out }
    }

    pub fn get(&self, i: usize, j: usize) -> u8 {
        (self.rows[i] >> (3 - j)) & 1
    }

    /// Row `i` as a bit vector in the same encoding as [`super::eval_quad`].
    pub fn row(&self, i: usize) -> [u8; 4] {
        [
            self.get(i, 0),
            self.get(i, 1),
            self.get(i, 2),
            self.get(i, 3),
        ]
    }

    pub fn transpose(&self) -> Self {
        let mut rows = [[0u8; 4]; 4];
        for (i, row) in rows.iter_mut().enumerate() {
            for (j, e) in row.iter_mut().enumerate() {
                *e = self.get(j, i);
            }
        }
        Self::from_rows(rows)
    }

    pub fn mul(&self, other: &GF2Matrix4) -> GF2Matrix4 {
        let mut rows = [[0u8; 4]; 4];
        for (i, row) in rows.iter_mut().enumerate() {
            for (j, e) in row.iter_mut().enumerate() {
                *e = (0..4).fold(0, |acc, k| acc ^ (self.get(i, k) & other.get(k, j)));
            }
        }
        Self::from_rows(rows)
    }

    /// Rank by Gaussian elimination.
    pub fn rank(&self) -> usize {
        let mut rows = self.rows;
        let mut rank = 0;
        for bit in (0..4).rev() {
            let Some(pivot) = (rank..4).find(|&r| rows[r] >> bit & 1 == 1) else {
                continue;
            };
            rows.swap(rank, pivot);
            for r in 0..4 {
                if r != rank && rows[r] >> bit & 1 == 1 {
                    rows[r] ^= rows[rank];
                }
            }
            rank += 1;
        }
        rank
    }

    pub fn is_invertible(&self) -> bool {
        self.rank() == 4
    }

    pub fn inverse(&self) -> Option<GF2Matrix4> {
        // eliminate on [A | I]
        let mut aug: [u8; 4] = self.rows;
        let mut inv: [u8; 4] = Self::IDENTITY.rows;
        for col in 0..4 {
            let bit = 3 - col;
            let pivot = (col..4).find(|&r| aug[r] >> bit & 1 == 1)?;
            aug.swap(col, pivot);
            inv.swap(col, pivot);
            for r in 0..4 {
                if r != col && aug[r] >> bit & 1 == 1 {
                    aug[r] ^= aug[col];
                    inv[r] ^= inv[col];
                }
            }
        }
        Some(GF2Matrix4 { rows: inv })
    }

    /// `g X g^T` for a matrix `X` over W.
    pub fn congruence(&self, x: &[[WElem; 4]; 4]) -> [[WElem; 4]; 4] {
        let mut out = [[WElem::ZERO; 4]; 4];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, e) in row.iter_mut().enumerate() {
                let mut acc = WElem::ZERO;
                for (k, xrow) in x.iter().enumerate() {
                    if self.get(i, k) == 0 {
                        continue;
                    }
                    for (l, &xv) in xrow.iter().enumerate() {
                        if self.get(j, l) == 1 {
                            acc = acc + xv;
                        }
                    }
                }
                *e = acc;
            }
        }
        out
    }
}

impl fmt::Display for GF2Matrix4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..4)
            .map(|i| (0..4).map(|j| char::from(b'0' + self.get(i, j))).collect())
            .collect();
        write!(f, "[{}]", rows.join(" "))
    }
}

/// All invertible 4x4 matrices over GF(2), in increasing [`GF2Matrix4::code`].
pub fn gl4() -> &'static [GF2Matrix4] {
    static GL4: OnceLock<Vec<GF2Matrix4>> = OnceLock::new();
    GL4.get_or_init(|| {
        (0..=u16::MAX)
            .map(GF2Matrix4::from_code)
            .filter(GF2Matrix4::is_invertible)
            .collect()
    })
}

/// A GF(2)-linear map on W in the coordinates `(1, t)`: column 0 is the
/// image of `1`, column 1 the image of `t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GF2Matrix2 {
    pub m: [[u8; 2]; 2],
}

impl GF2Matrix2 {
    pub const IDENTITY: GF2Matrix2 = GF2Matrix2 {
        m: [[1, 0], [0, 1]],
    };

    /// The map sending `1 -> one` and `t -> t_image`.
    pub fn from_images(one: WElem, t_image: WElem) -> Self {
        GF2Matrix2 {
            m: [[one.a, t_image.a], [one.b, t_image.b]],
        }
    }

    pub fn apply(&self, w: WElem) -> WElem {
        WElem::new(
            (self.m[0][0] & w.a) ^ (self.m[0][1] & w.b),
            (self.m[1][0] & w.a) ^ (self.m[1][1] & w.b),
        )
    }

    pub fn det(&self) -> u8 {
        (self.m[0][0] & self.m[1][1]) ^ (self.m[0][1] & self.m[1][0])
    }

    pub fn is_invertible(&self) -> bool {
        self.det() == 1
    }

    /// Every 2x2 matrix over GF(2).
    pub fn all() -> impl Iterator<Item = GF2Matrix2> {
        (0u8..16).map(|c| GF2Matrix2 {
            m: [[c >> 3 & 1, c >> 2 & 1], [c >> 1 & 1, c & 1]],
        })
    }
}

impl fmt::Display for GF2Matrix2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}{} {}{}]",
            self.m[0][0], self.m[0][1], self.m[1][0], self.m[1][1]
        )
    }
}
