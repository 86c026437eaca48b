use super::{mul, poly, Best, Built, Global, P};
use crate::jet::{ge, le, lin, neg, neg_y, x_ge, x_le, Component, Quad, X, Y};
use crate::model::Params;

pub(super) const ALL: &[fn(&Params) -> Built] = &[
    nie_etal_2017_ex34,
    nie_etal_2017_ex52,
    nie_etal_2017_ex54,
    nie_etal_2017_ex57,
    nie_etal_2017_ex58,
    nie_etal_2017_ex61,
    outrata_1990_ex1a,
    outrata_1990_ex1b,
    outrata_1990_ex1c,
    outrata_1990_ex1d,
    outrata_1990_ex1e,
    outrata_1990_ex2a,
    outrata_1990_ex2b,
    outrata_1990_ex2c,
    outrata_1990_ex2d,
    outrata_1990_ex2e,
    outrata_1993_ex31,
    outrata_1993_ex32,
    outrata_1994_ex31,
    outrata_cervinka_2009,
];

const NWY: &str = "Nie, Wang and Ye (2017)";

fn unit_x(nx: usize) -> Vec<Component> {
    let mut r = x_ge(nx, -1.0);
    r.extend(x_le(nx, 1.0));
    r
}

/// `c Σ v² + k` over the given variables.
fn sq_sum(vars: &[crate::jet::V], c: f64, k: f64) -> Component {
    let mut q = Quad::new().cst(k);
    for &v in vars {
        q = q.bil(v, v, c);
    }
    q.build()
}

fn nie_etal_2017_ex34(o: &Params) -> Built {
    P::new("NieEtal2017Ex34", NWY, 1, 2)
        .with(o)
        .F(lin(&[(X(0), 1.0), (Y(0), 1.0), (Y(1), 1.0)], 0.0))
        .G(vec![ge(X(0), 2.0), le(X(0), 3.0)])
        .f(poly(&[(1.0, &[(X(0), 1), (Y(0), 1)]), (1.0, &[(X(0), 1), (Y(1), 1)])], 0.0))
        .g(vec![
            poly(
                &[
                    (-1.0, &[(Y(0), 2)]),
                    (1.0, &[(Y(1), 2)]),
                    (1.0, &[(Y(0), 4)]),
                    (2.0, &[(Y(0), 2), (Y(1), 2)]),
                    (1.0, &[(Y(1), 4)]),
                ],
                0.0,
            ),
            neg(Y(0)),
        ])
        .xb(2.0, 3.0)
        .yb(-1.0, 1.0)
        .sol(Global, &[2.0], &[0.0, 0.0])
        .build()
}

fn nie_etal_2017_ex52(o: &Params) -> Built {
    let mut upper = unit_x(2);
    upper.push(poly(&[(1.0, &[(Y(0), 1), (Y(1), 1)]), (-1.0, &[(X(0), 2)])], 0.0));
    let ys = [Y(0), Y(1), Y(2)];
    let r = 2f64.sqrt();
    P::new("NieEtal2017Ex52", NWY, 2, 3)
        .with(o)
        .F(poly(
            &[
                (1.0, &[(X(0), 1), (Y(0), 1)]),
                (1.0, &[(X(1), 1), (Y(1), 1)]),
                (1.0, &[(X(0), 1), (X(1), 1), (Y(0), 1), (Y(1), 1), (Y(2), 1)]),
            ],
            0.0,
        ))
        .G(upper)
        .f(poly(
            &[
                (1.0, &[(X(0), 1), (Y(0), 2)]),
                (1.0, &[(X(1), 2), (Y(1), 1), (Y(2), 1)]),
                (-1.0, &[(Y(0), 1), (Y(2), 2)]),
            ],
            0.0,
        ))
        .g(vec![sq_sum(&ys, -1.0, 1.0), sq_sum(&ys, 1.0, -2.0)])
        .xb(-1.0, 1.0)
        .yb(-r, r)
        .sol(Best, &[-1.0, -1.0], &[1.1097, 0.3143, -0.8184])
        .build()
}

fn nie_etal_2017_ex54(o: &Params) -> Built {
    let xs = [X(0), X(1), X(2), X(3)];
    let ys = [Y(0), Y(1), Y(2), Y(3)];
    P::new("NieEtal2017Ex54", NWY, 4, 4)
        .with(o)
        .F(poly(
            &[
                (1.0, &[(X(0), 2), (Y(0), 1)]),
                (1.0, &[(X(1), 1), (Y(1), 1)]),
                (1.0, &[(X(2), 1), (Y(2), 2)]),
                (1.0, &[(X(3), 1), (Y(3), 2)]),
            ],
            0.0,
        ))
        .G(vec![
            sq_sum(&xs, 1.0, -1.0),
            poly(&[(1.0, &[(Y(0), 1), (Y(1), 1)]), (-1.0, &[(X(0), 1)])], 0.0),
            poly(&[(1.0, &[(Y(2), 1), (Y(3), 1)]), (-1.0, &[(X(2), 2)])], 0.0),
        ])
        .f(Quad::new()
            .bil(Y(0), Y(0), 1.0)
            .bil(Y(1), X(0), -1.0)
            .bil(Y(1), X(1), -1.0)
            .bil(Y(2), X(2), -1.0)
            .bil(Y(2), X(3), -1.0)
            .bil(Y(3), X(2), -1.0)
            .bil(Y(3), X(3), -1.0)
            .build())
        .g(vec![
            sq_sum(&ys, 1.0, -1.0),
            Quad::new()
                .bil(Y(1), Y(1), 1.0)
                .bil(Y(2), Y(2), 1.0)
                .bil(Y(3), Y(3), 1.0)
                .lin(Y(0), -1.0)
                .build(),
        ])
        .xb(-1.0, 1.0)
        .yb(-1.0, 1.0)
        .sol(Best, &[0.0, 0.0, -0.7071, -0.7071], &[0.6180, 0.0, -0.5559, -0.5559])
        .build()
}

fn nie_etal_2017_ex57(o: &Params) -> Built {
    let mut upper = unit_x(2);
    upper.push(Quad::new()
        .lin(X(0), -1.0)
        .lin(X(1), -1.0)
        .bil(X(0), X(0), 1.0)
        .bil(Y(0), Y(0), 1.0)
        .bil(Y(1), Y(1), 1.0)
        .build());
    P::new("NieEtal2017Ex57", NWY, 2, 3)
        .with(o)
        .F(poly(
            &[
                (0.5, &[(X(0), 2), (Y(0), 1)]),
                (1.0, &[(X(1), 1), (Y(1), 2)]),
                (-1.0, &[(X(0), 1), (Y(2), 1)]),
                (-1.0, &[(X(1), 2), (Y(2), 1)]),
            ],
            0.0,
        ))
        .G(upper)
        .f(poly(
            &[
                (1.0, &[(X(1), 1), (Y(0), 1), (Y(1), 1), (Y(2), 1)]),
                (1.0, &[(X(1), 1), (Y(1), 2)]),
                (-1.0, &[(X(1), 1), (Y(2), 3)]),
            ],
            0.0,
        ))
        .g(vec![
            Quad::new()
                .lin(X(0), -1.0)
                .bil(Y(0), Y(0), 1.0)
                .bil(Y(1), Y(1), 1.0)
                .bil(Y(2), Y(2), 1.0)
                .build(),
            Quad::new().bil(Y(1), Y(2), 2.0).cst(-1.0).build(),
        ])
        .xb(-1.0, 1.0)
        .yb(-1.0, 1.0)
        .sol(Best, &[1.0, 1.0], &[0.0, 0.0, 1.0])
        .build()
}

fn nie_etal_2017_ex58(o: &Params) -> Built {
    let xs = [X(0), X(1), X(2), X(3)];
    let total = |v: [crate::jet::V; 4]| lin(&v.map(|v| (v, 1.0)), 0.0);
    P::new("NieEtal2017Ex58", NWY, 4, 4)
        .with(o)
        .F(mul(total(xs), total([Y(0), Y(1), Y(2), Y(3)])))
        .G(vec![
            sq_sum(&xs, 1.0, -1.0),
            Quad::new().bil(Y(2), Y(2), 1.0).lin(X(3), -1.0).build(),
            Quad::new().bil(Y(1), Y(3), 1.0).lin(X(0), -1.0).build(),
        ])
        .f(Quad::new()
            .bil(X(0), Y(0), 1.0)
            .bil(X(1), Y(1), 1.0)
            .lin(Y(2), 0.1)
            .lin(Y(3), 0.5)
            .bil(Y(2), Y(3), -1.0)
            .build())
        .g(vec![
            Quad::new()
                .bil(Y(0), Y(0), 1.0)
                .bil(Y(1), Y(1), 2.0)
                .bil(Y(2), Y(2), 3.0)
                .bil(Y(3), Y(3), 4.0)
                .bil(X(0), X(0), -1.0)
                .bil(X(2), X(2), -1.0)
                .lin(X(1), -1.0)
                .lin(X(3), -1.0)
                .build(),
            Quad::new().bil(Y(1), Y(2), -1.0).bil(Y(0), Y(3), 1.0).build(),
        ])
        .xb(-1.0, 1.0)
        .yb(-2.0, 2.0)
        .sol(Best, &[0.5135, 0.5050, 0.4882, 0.4929], &[-0.8346, -0.4104, -0.2106, -0.2887])
        .build()
}

fn nie_etal_2017_ex61(o: &Params) -> Built {
    let mut upper = unit_x(2);
    upper.push(poly(&[(-1.0, &[(Y(1), 1)]), (-1.0, &[(Y(0), 1)]), (1.0, &[(Y(0), 1), (X(0), 2)])], 0.0));
    P::new("NieEtal2017Ex61", NWY, 2, 2)
        .with(o)
        .F(poly(
            &[
                (1.0, &[(Y(0), 3), (X(0), 2)]),
                (-3.0, &[(Y(0), 3), (X(0), 1), (X(1), 1)]),
                (-1.0, &[(Y(0), 2), (Y(1), 1)]),
                (1.0, &[(Y(1), 1), (X(1), 3)]),
            ],
            0.0,
        ))
        .G(upper)
        .f(poly(
            &[
                (1.0, &[(Y(0), 1), (Y(1), 2)]),
                (-1.0, &[(Y(1), 3)]),
                (-1.0, &[(Y(0), 2), (X(1), 1)]),
                (1.0, &[(Y(0), 2), (X(0), 2)]),
            ],
            0.0,
        ))
        .g(vec![sq_sum(&[Y(0), Y(1)], 1.0, -1.0)])
        .xb(-1.0, 1.0)
        .yb(-1.0, 1.0)
        .sol(Best, &[0.5708, -1.0], &[-0.1639, 0.9865])
        .build()
}

/// Lower-level constraints shared by the Outrata examples with a fixed polytope.
fn outrata_polytope() -> Vec<Component> {
    let mut g = vec![
        lin(&[(Y(0), -0.333), (Y(1), 1.0)], -2.0),
        lin(&[(Y(0), 1.0), (Y(1), -0.333)], -2.0),
    ];
    g.extend(neg_y(2));
    g
}

/// `½ yᵀ H y - (B x)ᵀ y` with constant `H` and `B`.
fn outrata_1990_ex1(name: &'static str, r: f64, h: [[f64; 2]; 2], b: [[f64; 2]; 2], o: &Params) -> P {
    let mut f = Quad::new()
        .bil(Y(0), Y(0), 0.5 * h[0][0])
        .bil(Y(1), Y(1), 0.5 * h[1][1])
        .bil(Y(0), Y(1), h[0][1]);
    for (k, row) in b.iter().enumerate() {
        for (i, &c) in row.iter().enumerate() {
            if c != 0.0 {
                f = f.bil(X(i), Y(k), -c);
            }
        }
    }
    let mut upper = Quad::new()
        .bil(Y(0), Y(0), 0.5)
        .bil(Y(1), Y(1), 0.5)
        .lin(Y(0), -3.0)
        .lin(Y(1), -4.0);
    if r != 0.0 {
        upper = upper.bil(X(0), X(0), r).bil(X(1), X(1), r);
    }
    let mut p = P::new(name, "Outrata (1990)", 2, 2)
        .with(o)
        .F(upper.build())
        .f(f.build())
        .g(outrata_polytope())
        .yb(0.0, 3.5);
    if name.ends_with('c') {
        p = p.xb(-50.0, 50.0);
    }
    p
}

const H1: [[f64; 2]; 2] = [[1.0, -2.0], [-2.0, 5.0]];
const H2: [[f64; 2]; 2] = [[1.0, 3.0], [3.0, 10.0]];
const ID: [[f64; 2]; 2] = [[1.0, 0.0], [0.0, 1.0]];

fn outrata_1990_ex1a(o: &Params) -> Built {
    outrata_1990_ex1("Outrata1990Ex1a", 0.1, H1, ID, o)
        .sol(Best, &[0.97, 3.14], &[2.6, 1.8])
        .build()
}

fn outrata_1990_ex1b(o: &Params) -> Built {
    outrata_1990_ex1("Outrata1990Ex1b", 1.0, H1, ID, o)
        .note("defined in the comment of Outrata1990Ex1a: r = 1")
        .sol(Best, &[0.28, 0.48], &[2.34, 1.03])
        .sol_note("depends on the starting point of the original algorithm")
        .build()
}

fn outrata_1990_ex1c(o: &Params) -> Built {
    outrata_1990_ex1("Outrata1990Ex1c", 0.0, H2, ID, o)
        .note("defined in the comment of Outrata1990Ex1a: r = 0, H = [1 3; 3 10]")
        .sol(Best, &[20.26, 42.81], &[3.0, 3.0])
        .sol_note("depends on the starting point of the original algorithm")
        .build()
}

fn outrata_1990_ex1d(o: &Params) -> Built {
    outrata_1990_ex1("Outrata1990Ex1d", 0.1, H2, ID, o)
        .note("defined in the comment of Outrata1990Ex1a: r = 0.1, H = [1 3; 3 10]")
        .sol(Best, &[2.0, 0.06], &[2.0, 0.0])
        .build()
}

fn outrata_1990_ex1e(o: &Params) -> Built {
    outrata_1990_ex1("Outrata1990Ex1e", 0.1, H2, [[-1.0, 2.0], [3.0, -3.0]], o)
        .note("defined in the comment of Outrata1990Ex1a: r = 0.1, H = [1 3; 3 10], b(x) = [-1 2; 3 -3] x")
        .sol(Best, &[2.42, -3.65], &[0.0, 1.58])
        .build()
}

/// Lower constraints whose first two rows move with `x`.
fn outrata_moving() -> Vec<Component> {
    let mut g = vec![
        Quad::new().lin(Y(0), -0.333).bil(X(0), Y(0), 0.1).lin(Y(1), 1.0).lin(X(0), -1.0).build(),
        Quad::new().lin(Y(0), 1.0).lin(Y(1), -0.333).bil(X(0), Y(1), -0.1).cst(-2.0).build(),
    ];
    g.extend(neg_y(2));
    g
}

/// `½ yᵀ H(x) y - (3 + 1.333x) y₁ - x y₂` with `H(x) = diag(a₀ + a₁x, b₀ + b₁x)`.
fn outrata_1990_ex2(name: &'static str, h: [f64; 4], moving: bool, o: &Params) -> P {
    let mut f = Quad::new()
        .lin(Y(0), -3.0)
        .bil(X(0), Y(0), -1.333)
        .bil(X(0), Y(1), -1.0);
    if h[0] != 0.0 {
        f = f.bil(Y(0), Y(0), 0.5 * h[0]);
    }
    if h[2] != 0.0 {
        f = f.bil(Y(1), Y(1), 0.5 * h[2]);
    }
    let mut cubic = Vec::new();
    if h[1] != 0.0 {
        cubic.push((0.5 * h[1], &[(X(0), 1), (Y(0), 2)][..]));
    }
    if h[3] != 0.0 {
        cubic.push((0.5 * h[3], &[(X(0), 1), (Y(1), 2)][..]));
    }
    let lower = if cubic.is_empty() {
        f.build()
    } else {
        super::sum(vec![f.build(), poly(&cubic, 0.0)])
    };
    let p = P::new(name, "Outrata (1990)", 1, 2)
        .with(o)
        .F(Quad::new()
            .sq(0.5, &[(Y(0), 1.0)], -3.0)
            .sq(1.0, &[(Y(1), 1.0)], -4.0)
            .build())
        .G(vec![neg(X(0))])
        .f(lower)
        .xb(0.0, 10.0);
    if moving {
        p.g(outrata_moving()).yb(0.0, 20.0)
    } else {
        p.g(outrata_polytope()).yb(0.0, 3.5)
    }
}

fn outrata_1990_ex2a(o: &Params) -> Built {
    outrata_1990_ex2("Outrata1990Ex2a", [1.0, 0.0, 1.0, 0.0], false, o)
        .sol(Best, &[2.07], &[3.0, 3.0])
        .build()
}

fn outrata_1990_ex2b(o: &Params) -> Built {
    outrata_1990_ex2("Outrata1990Ex2b", [1.0, 1.0, 0.0, 0.0], false, o)
        .note("defined in the comment of Outrata1990Ex2a: H(x) = diag(1 + x, 0)")
        .sol(Best, &[0.0], &[3.0, 3.0])
        .build()
}

fn outrata_1990_ex2c(o: &Params) -> Built {
    outrata_1990_ex2("Outrata1990Ex2c", [1.0, 1.0, 1.0, 0.1], false, o)
        .note("defined in the comment of Outrata1990Ex2a: H(x) = diag(1 + x, 1 + 0.1x)")
        .sol(Best, &[3.456], &[1.707, 2.569])
        .build()
}

fn outrata_1990_ex2d(o: &Params) -> Built {
    outrata_1990_ex2("Outrata1990Ex2d", [1.0, 0.0, 1.0, 0.0], true, o)
        .note("defined in the comment of Outrata1990Ex2a: H(x) = I with x-dependent constraints")
        .sol(Best, &[2.498], &[3.632, 2.8])
        .build()
}

fn outrata_1990_ex2e(o: &Params) -> Built {
    outrata_1990_ex2("Outrata1990Ex2e", [1.0, 1.0, 1.0, 0.0], true, o)
        .note("defined in the comment of Outrata1990Ex2a: H(x) = diag(1 + x, 1) with x-dependent constraints")
        .sol(Best, &[3.999], &[1.665, 3.887])
        .build()
}

/// `½(1 + 0.2x) y₁² + ½(1 + 0.1x) y₂² - (3 + a x) y₁ - x y₂`
fn outrata_lower(a: f64) -> Component {
    super::sum(vec![
        Quad::new()
            .bil(Y(0), Y(0), 0.5)
            .bil(Y(1), Y(1), 0.5)
            .lin(Y(0), -3.0)
            .bil(X(0), Y(0), -a)
            .bil(X(0), Y(1), -1.0)
            .build(),
        poly(&[(0.1, &[(X(0), 1), (Y(0), 2)]), (0.05, &[(X(0), 1), (Y(1), 2)])], 0.0),
    ])
}

fn outrata_upper() -> Component {
    Quad::new()
        .sq(0.5, &[(Y(0), 1.0)], -3.0)
        .sq(0.5, &[(Y(1), 1.0)], -4.0)
        .build()
}

/// Lower constraints with the disc `|y|² ≤ 9 + 0.1x`.
fn outrata_disc() -> Vec<Component> {
    let mut g = vec![
        lin(&[(Y(0), -0.333), (Y(1), 1.0), (X(0), 0.1)], -1.0),
        Quad::new().bil(Y(0), Y(0), 1.0).bil(Y(1), Y(1), 1.0).lin(X(0), -0.1).cst(-9.0).build(),
    ];
    g.extend(neg_y(2));
    g
}

fn outrata_1993_ex31(o: &Params) -> Built {
    let mut lower = vec![
        Quad::new()
            .lin(Y(0), -0.333)
            .bil(X(0), Y(0), 0.1)
            .lin(Y(1), 1.0)
            .lin(X(0), 0.1)
            .cst(-2.0)
            .build(),
        Quad::new()
            .lin(Y(0), 1.0)
            .lin(Y(1), -0.333)
            .bil(X(0), Y(1), -0.1)
            .lin(X(0), 0.1)
            .cst(-2.0)
            .build(),
    ];
    lower.extend(neg_y(2));
    P::new("Outrata1993Ex31", "Outrata (1993)", 1, 2)
        .with(o)
        .F(outrata_upper())
        .G(vec![neg(X(0))])
        .f(outrata_lower(1.33))
        .g(lower)
        .xb(0.0, 10.0)
        .yb(0.0, 10.0)
        .note("its known best solution is quoted under the name Outrata1993Ex1")
        .sol(Best, &[1.90910], &[2.97836, 2.23182])
        .build()
}

fn outrata_1993_ex32(o: &Params) -> Built {
    P::new("Outrata1993Ex32", "Outrata (1993)", 1, 2)
        .with(o)
        .F(outrata_upper())
        .G(vec![neg(X(0))])
        .f(outrata_lower(1.33))
        .g(outrata_disc())
        .xb(0.0, 10.0)
        .yb(0.0, 4.0)
        .note("defined in the comment of Outrata1993Ex31 by replacing the lower-level constraints")
        .note("its known best solution is quoted under the name Outrata1993Ex2")
        .sol(Best, &[4.06095], &[2.68227, 1.48710])
        .build()
}

fn outrata_1994_ex31(o: &Params) -> Built {
    P::new("Outrata1994Ex31", "Outrata (1994)", 1, 2)
        .with(o)
        .F(outrata_upper())
        .G(vec![neg(X(0)), le(X(0), 10.0)])
        .f(outrata_lower(1.333))
        .g(outrata_disc())
        .xb(0.0, 10.0)
        .yb(0.0, 4.0)
        .sol(Best, &[4.0604], &[2.6822, 1.4871])
        .build()
}

fn outrata_cervinka_2009(o: &Params) -> Built {
    P::new("OutrataCervinka2009", "Outrata and Cervinka (2009)", 2, 2)
        .with(o)
        .F(lin(&[(X(0), -2.0), (X(1), -0.5), (Y(1), -1.0)], 0.0))
        .G(vec![lin(&[(X(0), 1.0)], 0.0)])
        .f(Quad::new()
            .lin(Y(0), 1.0)
            .lin(Y(1), -1.0)
            .bil(X(0), Y(0), 1.0)
            .bil(X(1), Y(1), 1.0)
            .bil(Y(0), Y(0), 0.5)
            .bil(Y(1), Y(1), 0.5)
            .build())
        .g(vec![
            lin(&[(Y(1), 1.0)], 0.0),
            lin(&[(Y(1), 1.0), (Y(0), -1.0)], 0.0),
            lin(&[(Y(1), 1.0), (Y(0), 1.0)], 0.0),
        ])
        .xbi(0, -10.0, 0.0)
        .sol(Global, &[0.0, 0.0], &[0.0, 0.0])
        .build()
}
