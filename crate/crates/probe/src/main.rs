use nalgebra::{DMatrix, Complex};

fn main() {
    let s2 = 2.0_f64.sqrt();
    // paper G: [[-1/4, 5/4(1-i sqrt2)],[5/4(1+i sqrt2), -11/4]]
    let g = DMatrix::from_row_slice(2, 2, &[
        Complex::new(-0.25, 0.0), Complex::new(1.25, -1.25 * s2),
        Complex::new(1.25, 1.25 * s2), Complex::new(-2.75, 0.0),
    ]);
    let eig = g.clone().symmetric_eigen();
    println!("eigenvalues: {:?}", eig.eigenvalues.as_slice());
    // reconstruct
    let mut rec: DMatrix<Complex<f64>> = DMatrix::zeros(2, 2);
    for k in 0..2 {
        let v = eig.eigenvectors.column(k);
        let lam = eig.eigenvalues[k];
        for i in 0..2 { for j in 0..2 {
            rec[(i, j)] += v[i] * v[j].conj() * Complex::new(lam, 0.0);
        }}
    }
    let err: f64 = (0..2).flat_map(|i| (0..2).map(move |j| (i,j)))
        .map(|(i,j)| (rec[(i,j)] - g[(i,j)]).norm())
        .fold(0.0, f64::max);
    println!("reconstruction err: {:e}", err);

    // degenerate: 3 * I (4x4)
    let id4: DMatrix<Complex<f64>> = DMatrix::identity(4, 4) * Complex::new(3.0, 0.0);
    let e2 = id4.symmetric_eigen();
    println!("degenerate eigs: {:?}", e2.eigenvalues.as_slice());

    // near-degenerate orthonormality
    let mut m = DMatrix::identity(3, 3).map(|x: f64| Complex::new(x, 0.0));
    m[(0,0)] = Complex::new(1.0, 0.0);
    m[(1,1)] = Complex::new(1.0 + 1e-13, 0.0);
    m[(2,2)] = Complex::new(5.0, 0.0);
    m[(0,1)] = Complex::new(1e-14, 1e-14); m[(1,0)] = m[(0,1)].conj();
    let e3 = m.symmetric_eigen();
    let vt = &e3.eigenvectors;
    let gram = vt.adjoint() * vt;
    let mut worst = 0.0f64;
    for i in 0..3 { for j in 0..3 {
        let expect = if i == j {1.0} else {0.0};
        worst = worst.max((gram[(i,j)] - Complex::new(expect, 0.0)).norm());
    }}
    println!("near-degenerate gram err: {:e}", worst);
}
