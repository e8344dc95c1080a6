use derlog_core::matrix::combinations;
use derlog_core::*;

fn mat(r: &Ring, rows: &[&[&str]]) -> PolyMat {
    PolyMat::from_rows(
        r,
        rows.iter().map(|row| row.iter().map(|s| parse_poly(s, r).unwrap()).collect()).collect(),
    )
    .unwrap()
}

#[test]
fn combinations_are_lexicographic() {
    assert_eq!(combinations(4, 2).len(), 6);
    assert_eq!(combinations(4, 2)[0], vec![0, 1]);
    assert_eq!(combinations(4, 2)[5], vec![2, 3]);
    assert_eq!(combinations(3, 0), vec![Vec::<usize>::new()]);
    assert!(combinations(2, 3).is_empty());
    assert_eq!(combinations(5, 5), vec![vec![0, 1, 2, 3, 4]]);
}

#[test]
fn determinants() {
    let r = Ring::parse("x,y,z,w").unwrap();
    let m = mat(&r, &[&["x", "y"], &["z", "w"]]);
    assert_eq!(m.determinant().unwrap(), parse_poly("x*w - y*z", &r).unwrap());
    let m3 = mat(&r, &[&["1", "2", "3"], &["4", "5", "6"], &["7", "8", "10"]]);
    assert_eq!(m3.determinant().unwrap(), parse_poly("-3", &r).unwrap());
    assert_eq!(PolyMat::identity(&r, 4).determinant().unwrap(), Poly::one(&r));
}

#[test]
fn minors_match_brute_force() {
    let r = Ring::parse("x,y,z").unwrap();
    let m = mat(&r, &[&["x", "y", "z", "1"], &["y", "z", "x", "x"], &["z^2", "1", "y", "2"]]);
    let minors = m.minors(2).unwrap();
    let mut expected = Vec::new();
    for cols in combinations(4, 2) {
        for rows in combinations(3, 2) {
            expected.push(determinant_naive(&m.submatrix(&rows, &cols)));
        }
    }
    assert_eq!(minors, expected);
    assert!(m.minors(4).is_err());
    assert!(m.minors(0).is_err());
}

fn determinant_naive(m: &PolyMat) -> Poly {
    if m.rows() == 1 {
        return m.get(0, 0).clone();
    }
    let mut acc = Poly::zero(m.ring());
    for j in 0..m.cols() {
        let rows: Vec<usize> = (1..m.rows()).collect();
        let cols: Vec<usize> = (0..m.cols()).filter(|&c| c != j).collect();
        let term = m.get(0, j) * &determinant_naive(&m.submatrix(&rows, &cols));
        acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}
