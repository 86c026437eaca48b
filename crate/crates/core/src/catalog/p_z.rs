use std::f64::consts::PI;

use super::{div, exp_of, fac, poly, pow_lin, prod, Best, Built, Global, Local, P};
use crate::jet::{custom, ge, le, lin, neg, neg_x, neg_y, Component, Jet, Quad, V, X, Y};
use crate::model::Params;

pub(super) const ALL: &[fn(&Params) -> Built] = &[
    paulavicius_etal_2017a,
    paulavicius_etal_2017b,
    sahin_ciric_1998_ex2,
    shimizu_aiyoshi_1981_ex1,
    shimizu_aiyoshi_1981_ex2,
    shimizu_etal_1997a,
    shimizu_etal_1997b,
    sinha_malo_deb_2014_tp3,
    sinha_malo_deb_2014_tp6,
    sinha_malo_deb_2014_tp7,
    sinha_malo_deb_2014_tp8,
    sinha_malo_deb_2014_tp9,
    sinha_malo_deb_2014_tp10,
    tuy_etal_2007,
    vogel_2002,
    wan_wang_lv_2011,
    ye_zhu_2010_ex42,
    ye_zhu_2010_ex43,
    yezza_1996_ex31,
    yezza_1996_ex41,
    zlobec_2001a,
    zlobec_2001b,
];

const PKA: &str = "Paulavicius, Kleniati and Adjiman (2017)";
const SA: &str = "Shimizu and Aiyoshi (1981)";
const SIB: &str = "Shimizu, Ishizuka and Bard (1997)";
const SMD: &str = "Sinha, Malo and Deb (2014)";
const YZ: &str = "Ye and Zhu (2010)";
const YEZZA: &str = "Yezza (1996)";
const ZLOBEC: &str = "Zlobec (2001)";

fn sq(v: V, shift: f64) -> Quad {
    Quad::new().sq(1.0, &[(v, 1.0)], -shift)
}

fn unit_box(v: V) -> [Component; 2] {
    [ge(v, -1.0), le(v, 1.0)]
}

fn paulavicius_etal_2017a(o: &Params) -> Built {
    let mut upper = unit_box(X(0)).to_vec();
    upper.extend(unit_box(Y(0)));
    P::new("PaulaviciusEtal2017a", PKA, 1, 1)
        .with(o)
        .F(Quad::new().bil(X(0), X(0), 1.0).bil(Y(0), Y(0), 1.0).build())
        .G(upper)
        .f(poly(&[(1.0, &[(X(0), 1), (Y(0), 2)]), (-0.5, &[(Y(0), 4)])], 0.0))
        .g(unit_box(Y(0)).to_vec())
        .xb(-1.0, 1.0)
        .yb(-1.0, 1.0)
        .sol(Global, &[0.5], &[0.0])
        .build()
}

fn paulavicius_etal_2017b(o: &Params) -> Built {
    let mut upper = unit_box(X(0)).to_vec();
    upper.extend(unit_box(Y(0)));
    P::new("PaulaviciusEtal2017b", PKA, 1, 1)
        .with(o)
        .F(lin(&[(X(0), 1.0), (Y(0), 1.0)], 0.0))
        .G(upper)
        .f(poly(&[(0.5, &[(X(0), 1), (Y(0), 2)]), (-1.0, &[(X(0), 3), (Y(0), 1)])], 0.0))
        .g(unit_box(Y(0)).to_vec())
        .xb(-1.0, 1.0)
        .yb(-1.0, 1.0)
        .sol(Global, &[-1.0], &[-1.0])
        .build()
}

fn sahin_ciric_1998_ex2(o: &Params) -> Built {
    P::new("SahinCiric1998Ex2", "Sahin and Ciric (1998)", 1, 1)
        .with(o)
        .F(sq(X(0), 3.0).sq(1.0, &[(Y(0), 1.0)], -2.0).build())
        .G(vec![neg(X(0)), le(X(0), 8.0)])
        .f(sq(Y(0), 5.0).build())
        .g(vec![
            lin(&[(X(0), -2.0), (Y(0), 1.0)], -1.0),
            lin(&[(X(0), 1.0), (Y(0), -2.0)], 2.0),
            lin(&[(X(0), 1.0), (Y(0), 2.0)], -14.0),
        ])
        .xb(0.0, 8.0)
        .yb(0.0, 10.0)
        .sol_v(Best, &[1.0], &[3.0], Some(5.0), None)
        .build()
}

fn shimizu_aiyoshi_1981_ex1(o: &Params) -> Built {
    P::new("ShimizuAiyoshi1981Ex1", SA, 1, 1)
        .with(o)
        .F(Quad::new().bil(X(0), X(0), 1.0).sq(1.0, &[(Y(0), 1.0)], -10.0).build())
        .G(vec![le(X(0), 15.0), lin(&[(X(0), -1.0), (Y(0), 1.0)], 0.0), neg(X(0))])
        .f(Quad::new().sq(1.0, &[(X(0), 1.0), (Y(0), 2.0)], -30.0).build())
        .g(vec![lin(&[(X(0), 1.0), (Y(0), 1.0)], -20.0), le(Y(0), 20.0), neg(Y(0))])
        .xb(0.0, 15.0)
        .yb(0.0, 20.0)
        .sol(Global, &[10.0], &[10.0])
        .build()
}

fn shimizu_aiyoshi_1981_ex2(o: &Params) -> Built {
    let mut lower = vec![le(Y(0), 10.0), le(Y(1), 10.0)];
    lower.extend(neg_y(2));
    P::new("ShimizuAiyoshi1981Ex2", SA, 2, 2)
        .with(o)
        .F(sq(X(0), 30.0).sq(1.0, &[(X(1), 1.0)], -20.0).lin(Y(0), -20.0).lin(Y(1), 20.0).build())
        .G(vec![
            lin(&[(X(0), -1.0), (X(1), -2.0)], 30.0),
            lin(&[(X(0), 1.0), (X(1), 1.0)], -25.0),
            le(X(1), 15.0),
        ])
        .f(Quad::new().sq(1.0, &[(X(0), 1.0), (Y(0), -1.0)], 0.0).sq(1.0, &[(X(1), 1.0), (Y(1), -1.0)], 0.0).build())
        .g(lower)
        .xbi(0, 0.0, 25.0)
        .xbi(1, 5.0, 15.0)
        .yb(0.0, 10.0)
        .sol(Global, &[20.0, 5.0], &[10.0, 5.0])
        .build()
}

fn shimizu_etal_1997a(o: &Params) -> Built {
    P::new("ShimizuEtal1997a", SIB, 1, 1)
        .with(o)
        .F(sq(X(0), 5.0).sq(1.0, &[(Y(0), 2.0)], 1.0).build())
        .f(sq(Y(0), 1.0).bil(X(0), Y(0), -1.5).build())
        .g(vec![
            lin(&[(X(0), -3.0), (Y(0), 1.0)], 3.0),
            lin(&[(X(0), 1.0), (Y(0), -0.5)], -4.0),
            lin(&[(X(0), 1.0), (Y(0), 1.0)], -7.0),
        ])
        .xb(0.0, 10.0)
        .yb(-5.0, 10.0)
        .sol(Best, &[5.0], &[2.0])
        .build()
}

fn shimizu_etal_1997b(o: &Params) -> Built {
    P::new("ShimizuEtal1997b", SIB, 1, 1)
        .with(o)
        .F(Quad::new().bil(X(0), X(0), 16.0).bil(Y(0), Y(0), 9.0).build())
        .G(vec![lin(&[(X(0), -4.0), (Y(0), 1.0)], 0.0), neg(X(0))])
        .f(pow_lin(1.0, &[(X(0), 1.0), (Y(0), 1.0)], -20.0, 4.0))
        .g(vec![lin(&[(X(0), 4.0), (Y(0), 1.0)], -50.0), neg(Y(0))])
        .xb(0.0, 12.5)
        .yb(0.0, 50.0)
        .sol(Global, &[11.25], &[5.0])
        .sol(Local, &[7.2], &[12.8])
        .build()
}

fn sinha_malo_deb_2014_tp3(o: &Params) -> Built {
    let mut upper = vec![poly(&[(1.0, &[(X(0), 2)]), (2.0, &[(X(1), 1)])], -4.0)];
    upper.extend(neg_x(2));
    let mut lower = vec![
        poly(
            &[
                (-1.0, &[(X(0), 2)]),
                (2.0, &[(X(0), 1)]),
                (-1.0, &[(X(1), 2)]),
                (2.0, &[(Y(0), 1)]),
                (-1.0, &[(Y(1), 1)]),
            ],
            -3.0,
        ),
        lin(&[(X(1), -1.0), (Y(0), -3.0), (Y(1), 4.0)], 4.0),
    ];
    lower.extend(neg_y(2));
    P::new("SinhaMaloDeb2014TP3", SMD, 2, 2)
        .with(o)
        .F(Quad::new().bil(X(0), X(0), -1.0).bil(X(1), X(1), -3.0).lin(Y(0), -4.0).bil(Y(1), Y(1), 1.0).build())
        .G(upper)
        .f(Quad::new().bil(X(0), X(0), 2.0).bil(Y(0), Y(0), 1.0).lin(Y(1), -5.0).build())
        .g(lower)
        .xb(0.0, 2.0)
        .yb(0.0, 10.0)
        .values(Some(-18.6787), Some(-1.0156))
        .build()
}

fn sinha_malo_deb_2014_tp6(o: &Params) -> Built {
    let mut lower = vec![
        lin(&[(X(0), 4.0), (Y(0), 5.0), (Y(1), 4.0)], -12.0),
        lin(&[(X(0), -4.0), (Y(0), -5.0), (Y(1), 4.0)], 4.0),
        lin(&[(X(0), 4.0), (Y(0), -4.0), (Y(1), 5.0)], -4.0),
        lin(&[(X(0), -4.0), (Y(0), 4.0), (Y(1), 5.0)], -4.0),
    ];
    lower.extend(neg_y(2));
    P::new("SinhaMaloDeb2014TP6", SMD, 1, 2)
        .with(o)
        .F(sq(X(0), 1.0).lin(Y(0), 2.0).lin(X(0), -2.0).build())
        .G(vec![neg(X(0))])
        .f(Quad::new().sq(1.0, &[(Y(0), 2.0)], -4.0).sq(1.0, &[(Y(1), 2.0)], -1.0).bil(X(0), Y(0), 1.0).build())
        .g(lower)
        .xb(0.0, 3.0)
        .yb(0.0, 3.0)
        .values(Some(-1.2091), Some(7.6145))
        .build()
}

fn tp7_ratio(sign: f64) -> Component {
    let num = prod(sign, vec![fac(&[(X(0), 1.0), (Y(0), 1.0)], 0.0, 1.0), fac(&[(X(1), 1.0), (Y(1), 1.0)], 0.0, 1.0)]);
    let den = poly(&[(1.0, &[(X(0), 1), (Y(0), 1)]), (1.0, &[(X(1), 1), (Y(1), 1)])], 1.0);
    div(num, den)
}

fn sinha_malo_deb_2014_tp7(o: &Params) -> Built {
    let mut upper = vec![
        poly(&[(1.0, &[(X(0), 2)]), (1.0, &[(X(1), 2)])], -100.0),
        lin(&[(X(0), 1.0), (X(1), -1.0)], 0.0),
    ];
    upper.extend(neg_x(2));
    let mut lower = vec![
        lin(&[(Y(0), 1.0), (X(0), -1.0)], 0.0),
        lin(&[(Y(1), 1.0), (X(1), -1.0)], 0.0),
    ];
    lower.extend(neg_y(2));
    let mut p = P::new("SinhaMaloDeb2014TP7", SMD, 2, 2)
        .with(o)
        .F(tp7_ratio(-1.0))
        .G(upper)
        .f(tp7_ratio(1.0))
        .g(lower)
        .xb(0.0, 10.0)
        .yb(0.0, 10.0);
    for i in 0..2 {
        p = p.dom_x(i, 0.0, 10.0).dom_y(i, 0.0, 10.0);
    }
    p.guard(|x, y| {
        let d = 1.0 + x[0] * y[0] + x[1] * y[1];
        if d.abs() < 1e-12 {
            Err(format!("denominator 1 + x1 y1 + x2 y2 = {d} vanishes"))
        } else {
            Ok(())
        }
    })
    .values(Some(-1.96), Some(1.96))
    .build()
}

fn tp8_arg(x: &[f64], y: &[f64]) -> f64 {
    2.0 * x[0] + 2.0 * x[1] - 3.0 * y[0] - 3.0 * y[1] - 60.0
}

fn sinha_malo_deb_2014_tp8(o: &Params) -> Built {
    let coef = [(X(0), 2.0), (X(1), 2.0), (Y(0), -3.0), (Y(1), -3.0)];
    let abs = custom(move |x, y, j: &mut Jet| {
        let t = tp8_arg(x, y);
        j.set(t.abs());
        let s = if t > 0.0 {
            1.0
        } else if t < 0.0 {
            -1.0
        } else {
            0.0
        };
        for &(v, c) in &coef {
            j.d(v, s * c);
        }
    });
    let mut upper = vec![
        lin(&[(X(0), 1.0), (X(1), 1.0), (Y(0), 1.0), (Y(1), -2.0)], -40.0),
        le(X(0), 50.0),
        le(X(1), 50.0),
    ];
    upper.extend(neg_x(2));
    let lower = vec![
        lin(&[(Y(0), 2.0), (X(0), -1.0)], 10.0),
        lin(&[(Y(1), 2.0), (X(1), -1.0)], 10.0),
        le(Y(0), 20.0),
        le(Y(1), 20.0),
        lin(&[(Y(0), -1.0)], -10.0),
        lin(&[(Y(1), -1.0)], -10.0),
    ];
    P::new("SinhaMaloDeb2014TP8", SMD, 2, 2)
        .with(o)
        .F(abs)
        .G(upper)
        .f(Quad::new()
            .sq(1.0, &[(Y(0), 1.0), (X(0), -1.0)], 20.0)
            .sq(1.0, &[(Y(1), 1.0), (X(1), -1.0)], 20.0)
            .build())
        .g(lower)
        .xb(0.0, 50.0)
        .yb(-10.0, 20.0)
        .kink(1e-8, |x, y| tp8_arg(x, y).abs() / 26f64.sqrt())
        .labels("N-L-N-L")
        .note("the first constraint block after the upper objective involves only upper-level data and is read as G")
        .values(Some(0.0), Some(100.0))
        .build()
}

/// Product `Π cos u_i` with its first and second partials in `u`.
fn cos_prod(u: &[f64]) -> (f64, Vec<f64>, Vec<Vec<f64>>) {
    let n = u.len();
    let (c, s): (Vec<f64>, Vec<f64>) = u.iter().map(|v| (v.cos(), v.sin())).unzip();
    let except = |skip: &[usize]| -> f64 { (0..n).filter(|k| !skip.contains(k)).map(|k| c[k]).product() };
    let p = except(&[]);
    let d1: Vec<f64> = (0..n).map(|i| -s[i] * except(&[i])).collect();
    let mut d2 = vec![vec![0.0; n]; n];
    for i in 0..n {
        d2[i][i] = -p;
        for k in i + 1..n {
            let v = s[i] * s[k] * except(&[i, k]);
            d2[i][k] = v;
            d2[k][i] = v;
        }
    }
    (p, d1, d2)
}

fn tp9_10_upper(n: usize) -> Component {
    let mut q = Quad::new();
    for i in 0..n {
        q = q.sq(1.0, &[(X(i), 1.0)], -1.0).bil(Y(i), Y(i), 1.0);
    }
    q.build()
}

fn tp9_10_lower(n: usize) -> Vec<Component> {
    let mut rows: Vec<Component> = (0..n).map(|i| le(Y(i), PI)).collect();
    rows.extend((0..n).map(|i| ge(Y(i), -PI)));
    rows
}

/// `(1 + Σ y²/400 - Π cos(y_i/√i)) Σ x²`.
fn tp9_exponent(n: usize) -> Component {
    custom(move |x, y, j: &mut Jet| {
        let r: Vec<f64> = (1..=n).map(|i| 1.0 / (i as f64).sqrt()).collect();
        let u: Vec<f64> = (0..n).map(|i| y[i] * r[i]).collect();
        let (p, dp, ddp) = cos_prod(&u);
        let sx: f64 = x.iter().map(|v| v * v).sum();
        let sy: f64 = y.iter().map(|v| v * v).sum();
        let b = 1.0 + sy / 400.0 - p;
        let db: Vec<f64> = (0..n).map(|i| y[i] / 200.0 - dp[i] * r[i]).collect();
        j.set(b * sx);
        for i in 0..n {
            j.d(Y(i), sx * db[i]);
            j.d(X(i), 2.0 * x[i] * b);
        }
        if !j.second() {
            return;
        }
        for i in 0..n {
            j.d2(X(i), X(i), 2.0 * b);
            j.d2(Y(i), Y(i), sx / 200.0);
            for k in 0..n {
                if k >= i {
                    j.d2(Y(i), Y(k), -sx * ddp[i][k] * r[i] * r[k]);
                }
                j.d2(X(i), Y(k), 2.0 * x[i] * db[k]);
            }
        }
    })
}

/// `1 + Σ (x y)²/4000 - Π cos(x_i y_i/√i)`.
fn tp10_exponent(n: usize) -> Component {
    custom(move |x, y, j: &mut Jet| {
        let r: Vec<f64> = (1..=n).map(|i| 1.0 / (i as f64).sqrt()).collect();
        let u: Vec<f64> = (0..n).map(|i| x[i] * y[i] * r[i]).collect();
        let (p, dp, ddp) = cos_prod(&u);
        let q: f64 = (0..n).map(|i| (x[i] * y[i]).powi(2)).sum();
        j.set(1.0 + q / 4000.0 - p);
        // u_i depends on (x_i, y_i) only
        let du = |i: usize| [(X(i), y[i] * r[i]), (Y(i), x[i] * r[i])];
        for i in 0..n {
            j.d(X(i), x[i] * y[i] * y[i] / 2000.0 - dp[i] * y[i] * r[i]);
            j.d(Y(i), x[i] * x[i] * y[i] / 2000.0 - dp[i] * x[i] * r[i]);
        }
        if !j.second() {
            return;
        }
        for i in 0..n {
            j.d2(X(i), X(i), y[i] * y[i] / 2000.0);
            j.d2(Y(i), Y(i), x[i] * x[i] / 2000.0);
            j.d2(X(i), Y(i), x[i] * y[i] / 1000.0 - dp[i] * r[i]);
            for k in i..n {
                for (a, ca) in du(i) {
                    for (b, cb) in du(k) {
                        // diagonal blocks visit each off-diagonal pair twice
                        if k == i && a != b && a == Y(i) {
                            continue;
                        }
                        j.d2(a, b, -ddp[i][k] * ca * cb);
                    }
                }
            }
        }
    })
}

fn sinha_malo_deb_2014_tp9(o: &Params) -> Built {
    P::new("SinhaMaloDeb2014TP9", SMD, 10, 10)
        .with(o)
        .F(tp9_10_upper(10))
        .f(exp_of(tp9_exponent(10)))
        .g(tp9_10_lower(10))
        // x is free; on ±10 the exponent reaches about 2250 and exp overflows
        .xb(-5.0, 5.0)
        .yb(-PI, PI)
        .values(Some(0.0), Some(1.0))
        .build()
}

fn sinha_malo_deb_2014_tp10(o: &Params) -> Built {
    P::new("SinhaMaloDeb2014TP10", SMD, 10, 10)
        .with(o)
        .F(tp9_10_upper(10))
        .f(exp_of(tp10_exponent(10)))
        .g(tp9_10_lower(10))
        .yb(-PI, PI)
        .note("the exponent is read as the whole braced expression 1 + Σ(x_i y_i)²/4000 - Π cos(x_i y_i/√i)")
        .values(Some(0.0), Some(1.0))
        .build()
}

fn tuy_etal_2007(o: &Params) -> Built {
    P::new("TuyEtal2007", "Tuy, Migdalas and Hoai-Phuong (2007)", 1, 1)
        .with(o)
        .F(Quad::new().bil(X(0), X(0), 1.0).bil(Y(0), Y(0), 1.0).build())
        .G(vec![neg(X(0)), neg(Y(0))])
        .f(lin(&[(Y(0), -1.0)], 0.0))
        .g(vec![
            lin(&[(X(0), 3.0), (Y(0), 1.0)], -15.0),
            lin(&[(X(0), 1.0), (Y(0), 1.0)], -7.0),
            lin(&[(X(0), 1.0), (Y(0), 3.0)], -15.0),
        ])
        .xb(0.0, 10.0)
        .yb(0.0, 15.0)
        .sol(Best, &[4.492188], &[1.523438])
        .build()
}

fn cubic_lower() -> (Component, Vec<Component>) {
    (
        poly(&[(1.0, &[(Y(0), 3)]), (-3.0, &[(Y(0), 1)])], 0.0),
        vec![lin(&[(X(0), 1.0), (Y(0), -1.0)], 0.0)],
    )
}

fn vogel_2002(o: &Params) -> Built {
    let (f, g) = cubic_lower();
    P::new("Vogel2002", "Vogel (2002)", 1, 1)
        .with(o)
        .F(Quad::new().sq(1.0, &[(Y(0), 1.0)], 1.0).build())
        .G(vec![lin(&[(X(0), -1.0)], -3.0), le(X(0), 2.0)])
        .f(f)
        .g(g)
        .xb(-3.0, 2.0)
        .yb(-3.0, 10.0)
        .sol(Global, &[-2.0], &[-2.0])
        .build()
}

fn wan_wang_lv_2011(o: &Params) -> Built {
    let mut lower = vec![
        lin(&[(Y(0), -1.0), (Y(1), 1.0), (Y(2), 1.0)], -1.0),
        lin(&[(X(0), 2.0), (Y(0), -1.0), (Y(1), 2.0), (Y(2), -0.5)], -1.0),
        lin(&[(X(1), 2.0), (Y(0), 2.0), (Y(1), -1.0), (Y(2), -0.5)], -1.0),
    ];
    lower.extend(neg_x(2));
    lower.extend(neg_y(3));
    P::new("WanWangLv2011", "Wan, Wang and Lv (2011)", 2, 3)
        .with(o)
        .F(prod(
            1.0,
            vec![
                fac(&[(X(0), 1.0), (X(1), -1.0), (Y(1), 2.0)], 1.0, 1.0),
                fac(&[(X(0), -1.0), (Y(0), -2.0), (Y(1), 1.0), (Y(2), 5.0)], 8.0, 1.0),
            ],
        ))
        .f(lin(&[(Y(0), 2.0), (Y(1), -1.0), (Y(2), 1.0)], 0.0))
        .g(lower)
        .xb(0.0, 2.0)
        .yb(0.0, 5.0)
        .sol(Global, &[0.0, 0.75], &[0.0, 0.5, 0.0])
        .build()
}

fn ye_zhu(name: &'static str, y_shift: f64) -> P {
    let (f, g) = cubic_lower();
    P::new(name, YZ, 1, 1)
        .F(sq(X(0), 1.0).sq(1.0, &[(Y(0), 1.0)], -y_shift).build())
        .G(vec![lin(&[(X(0), -1.0)], -3.0), le(X(0), 2.0)])
        .f(f)
        .g(g)
        .xb(-3.0, 2.0)
        .yb(-3.0, 10.0)
        .sol(Global, &[1.0], &[1.0])
}

fn ye_zhu_2010_ex42(o: &Params) -> Built {
    ye_zhu("YeZhu2010Ex42", 0.0).with(o).build()
}

fn ye_zhu_2010_ex43(o: &Params) -> Built {
    ye_zhu("YeZhu2010Ex43", 2.0).with(o).build()
}

fn yezza_1996_ex31(o: &Params) -> Built {
    P::new("Yezza1996Ex31", YEZZA, 1, 1)
        .with(o)
        .F(poly(&[(-4.0, &[(X(0), 1), (Y(0), 1)]), (3.0, &[(Y(0), 1)]), (2.0, &[(X(0), 1)])], 1.0))
        .G(vec![neg(X(0)), le(X(0), 1.0)])
        .f(poly(&[(-1.0, &[(Y(0), 1)]), (4.0, &[(X(0), 1), (Y(0), 1)]), (-2.0, &[(X(0), 1)])], -2.0))
        .g(vec![neg(Y(0)), le(Y(0), 1.0)])
        .xb(0.0, 1.0)
        .yb(0.0, 1.0)
        .sol(Global, &[0.25], &[0.0])
        .build()
}

fn yezza_1996_ex41(o: &Params) -> Built {
    P::new("Yezza1996Ex41", YEZZA, 1, 1)
        .with(o)
        .F(Quad::new().sq(0.5, &[(Y(0), 1.0)], -2.0).sq(0.5, &[(X(0), 1.0), (Y(0), -1.0)], -2.0).build())
        .f(Quad::new().bil(Y(0), Y(0), 0.5).lin(X(0), 1.0).lin(Y(0), -1.0).build())
        .g(vec![neg(Y(0)), lin(&[(Y(0), 1.0), (X(0), -1.0)], 0.0)])
        .yb(0.0, 10.0)
        .sol(Global, &[3.0], &[1.0])
        .build()
}

fn zlobec_2001a(o: &Params) -> Built {
    let mut lower = vec![lin(&[(X(0), 1.0), (Y(0), 1.0)], 0.0), le(Y(1), 1.0)];
    lower.extend(neg_y(2));
    let upper = custom(|x, y, j: &mut Jet| {
        let v = -y[0] / x[0];
        j.set(v);
        j.d(Y(0), -1.0 / x[0]);
        j.d(X(0), -v / x[0]);
        j.d2(X(0), X(0), 2.0 * v / (x[0] * x[0]));
        j.d2(X(0), Y(0), 1.0 / (x[0] * x[0]));
    });
    P::new("Zlobec2001a", ZLOBEC, 1, 2)
        .with(o)
        .F(upper)
        .f(lin(&[(Y(0), -1.0), (Y(1), -1.0)], 0.0))
        .g(lower)
        .dom_x(0, 0.1, 10.0)
        .guard(|x, _| if x[0] == 0.0 { Err("x = 0".to_string()) } else { Ok(()) })
        .note("as written, x + y1 <= 0 with y1 >= 0 forces x <= 0, so the listed point (1; 1, 0) is infeasible")
        .sol(Global, &[1.0], &[1.0, 0.0])
        .build()
}

fn zlobec_2001b(o: &Params) -> Built {
    let xy = poly(&[(1.0, &[(X(0), 1), (Y(0), 1)])], 0.0);
    let neg_xy = poly(&[(-1.0, &[(X(0), 1), (Y(0), 1)])], 0.0);
    P::new("Zlobec2001b", ZLOBEC, 1, 1)
        .with(o)
        .F(lin(&[(X(0), 1.0), (Y(0), 1.0)], 0.0))
        .G(vec![le(X(0), 1.0), neg(X(0))])
        .f(lin(&[(Y(0), -1.0)], 0.0))
        .g(vec![le(Y(0), 1.0), neg(Y(0)), xy, neg_xy])
        .xb(0.0, 1.0)
        .yb(0.0, 1.0)
        .equalities(0, 1)
        .no_optimal_solution()
        .build()
}
