//! Helpers shared by the integration test targets.

use pcgroup::families::{x, y, Z};
use pcgroup::pc::{NormalWord, PcPresentation};

pub fn nf(pres: &PcPresentation, support: &[(usize, u8)]) -> NormalWord {
    NormalWord::from_sparse(pres.ngens(), support)
}

pub fn both_bracketings(
    pres: &PcPresentation,
    a: usize,
    b: usize,
    c: usize,
) -> (NormalWord, NormalWord) {
    let (ga, gb, gc) = (pres.generator(a), pres.generator(b), pres.generator(c));
    let left = pres.multiply(&pres.multiply(&ga, &gb), &gc);
    let right = pres.multiply(&ga, &pres.multiply(&gb, &gc));
    (left, right)
}

// (a, b, c, normal form of abc)
pub fn table_rows(
    pres: &PcPresentation,
    n: usize,
    eps: [u8; 4],
) -> Vec<(usize, usize, usize, NormalWord)> {
    let e = |j: usize| eps[j - 1];
    let mut rows = vec![
        (
            x(3),
            x(2),
            x(1),
            nf(pres, &[(x(1), 1), (x(2), 1), (x(3), 1), (y(1), 1)]),
        ),
        (
            x(4),
            x(2),
            x(1),
            nf(pres, &[(x(1), 1), (x(2), 1), (x(4), 1)]),
        ),
        (
            x(4),
            x(3),
            x(1),
            nf(pres, &[(x(1), 1), (x(3), 1), (x(4), 1), (Z, 1), (y(1), 1)]),
        ),
        (
            x(4),
            x(3),
            x(2),
            nf(pres, &[(x(2), 1), (x(3), 1), (x(4), 1), (Z, 1)]),
        ),
    ];
    for s in 1..=n.saturating_sub(2) {
        let ys = (y(s), 1);
        let ys1 = (y(s + 1), 1);
        rows.push((
            y(s),
            x(2),
            x(1),
            nf(pres, &[(x(1), 1), (x(2), 1), (Z, 1), ys, ys1]),
        ));
        // y_1 y_s collapses to y_1^2 when s = 1
        let y1ys = pres.multiply(&pres.generator(y(1)), &pres.generator(y(s)));
        let x13 = nf(pres, &[(x(1), 1), (x(3), 1)]);
        rows.push((y(s), x(3), x(1), pres.multiply(&x13, &y1ys)));
        rows.push((
            y(s),
            x(4),
            x(1),
            nf(pres, &[(x(1), 1), (x(4), 1), (Z, 1), ys, ys1]),
        ));
        rows.push((
            y(s),
            x(3),
            x(2),
            nf(pres, &[(x(2), 1), (x(3), 1), (Z, 1), ys, ys1]),
        ));
        rows.push((y(s), x(4), x(2), nf(pres, &[(x(2), 1), (x(4), 1), ys])));
        rows.push((y(s), x(4), x(3), nf(pres, &[(x(3), 1), (x(4), 1), ys, ys1])));
    }
    for j in 1..=4 {
        for i in 1..j {
            rows.push((x(j), x(j), x(i), nf(pres, &[(x(i), 1), (Z, e(j))])));
            rows.push((x(j), x(i), x(i), nf(pres, &[(x(j), 1), (Z, e(i))])));
        }
    }
    for s in 1..=n.saturating_sub(2) {
        for i in [1, 3] {
            rows.push((y(s), y(s), x(i), nf(pres, &[(x(i), 1), (y(s + 1), 1)])));
        }
        for i in 1..=4 {
            rows.push((y(s), x(i), x(i), nf(pres, &[(Z, e(i)), (y(s), 1)])));
        }
    }
    for i in 1..=4 {
        rows.push((x(i), x(i), x(i), nf(pres, &[(x(i), 1), (Z, e(i))])));
    }
    rows
}
