use super::{decay, fac, monof, prod, ratio_lin, sum, Best, Built, Cited, Global, P};
use crate::jet::{ge, le, lin, neg, neg_x, neg_y, x_ge, x_le, y_ge, y_le, Component, Quad, V, X, Y};
use crate::model::Params;

pub(super) const ALL: &[fn(&Params) -> Built] = &[
    gumus_floudas_2001_ex1,
    gumus_floudas_2001_ex3,
    gumus_floudas_2001_ex4,
    gumus_floudas_2001_ex5,
    hatz_etal_2013,
    henderson_quandt_1958,
    henrion_surowiec_2011,
    ishizuka_aiyoshi_1992a,
    kleniati_adjiman_2014_ex3,
    kleniati_adjiman_2014_ex4,
    lampariello_sagratella_2017_ex23,
    lampariello_sagratella_2017_ex31,
    lampariello_sagratella_2017_ex32,
    lampariello_sagratella_2017_ex33,
    lampariello_sagratella_2017_ex35,
    lucchetti_etal_1987,
    lu_deb_sinha_2016a,
    lu_deb_sinha_2016b,
    lu_deb_sinha_2016c,
    lu_deb_sinha_2016d,
    lu_deb_sinha_2016e,
    lu_deb_sinha_2016f,
];

fn gumus_floudas_2001_ex1(o: &Params) -> Built {
    P::new("GumusFloudas2001Ex1", "Gumus and Floudas (2001)", 1, 1)
        .with(o)
        .F(Quad::new().bil(X(0), X(0), 16.0).bil(Y(0), Y(0), 9.0).build())
        .G(vec![neg(X(0)), le(X(0), 12.5), lin(&[(X(0), -4.0), (Y(0), 1.0)], 0.0)])
        .f(pow_sum(&[(X(0), 1.0), (Y(0), 1.0)], -20.0, 4.0))
        .g(vec![neg(Y(0)), le(Y(0), 50.0), lin(&[(X(0), 4.0), (Y(0), 1.0)], -50.0)])
        .xb(0.0, 12.5)
        .yb(0.0, 50.0)
        .sol(Global, &[11.25], &[5.0])
        .build()
}

fn pow_sum(terms: &[(V, f64)], c0: f64, p: f64) -> Component {
    prod(1.0, vec![fac(terms, c0, p)])
}

fn gumus_floudas_2001_ex3(o: &Params) -> Built {
    let mut lower = neg_y(3);
    lower.extend(y_le(3, 2.0));
    lower.extend([
        lin(&[(Y(0), -1.0), (Y(1), 1.0), (Y(2), 1.0)], -1.0),
        lin(&[(X(0), 2.0), (Y(0), -1.0), (Y(1), 2.0), (Y(2), -0.5)], -1.0),
        lin(&[(X(1), 2.0), (Y(0), 2.0), (Y(1), -1.0), (Y(2), -0.5)], -1.0),
    ]);
    let mut upper = neg_x(2);
    upper.extend(x_le(2, 2.0));
    P::new("GumusFloudas2001Ex3", "Gumus and Floudas (2001)", 2, 3)
        .with(o)
        .F(lin(&[(X(0), -8.0), (X(1), -4.0), (Y(0), 1.0), (Y(1), -40.0), (Y(2), -4.0)], 0.0))
        .G(upper)
        .f(ratio_lin(
            &[(X(0), 1.0), (X(1), 1.0), (Y(0), 2.0), (Y(1), -1.0), (Y(2), 1.0)],
            1.0,
            &[(X(0), 2.0), (Y(0), 1.0), (Y(1), 1.0), (Y(2), -3.0)],
            6.0,
        ))
        .g(lower)
        .xb(0.0, 2.0)
        .yb(0.0, 2.0)
        .dom_y(2, 0.0, 1.5)
        .guard(|x, y| {
            let d = 6.0 + 2.0 * x[0] + y[0] + y[1] - 3.0 * y[2];
            if d > 0.0 {
                Ok(())
            } else {
                Err(format!("denominator of f is {d}"))
            }
        })
        .sol(Global, &[0.0, 0.9], &[0.0, 0.6, 0.4])
        .build()
}

fn gumus_floudas_2001_ex4(o: &Params) -> Built {
    P::new("GumusFloudas2001Ex4", "Gumus and Floudas (2001)", 1, 1)
        .with(o)
        .F(Quad::new()
            .sq(1.0, &[(X(0), 1.0)], -3.0)
            .sq(1.0, &[(Y(0), 1.0)], -2.0)
            .build())
        .G(vec![
            neg(X(0)),
            le(X(0), 8.0),
            lin(&[(X(0), -2.0), (Y(0), 1.0)], -1.0),
            lin(&[(X(0), 1.0), (Y(0), -2.0)], 2.0),
            lin(&[(X(0), 1.0), (Y(0), 2.0)], -14.0),
        ])
        .f(Quad::new().sq(1.0, &[(Y(0), 1.0)], -5.0).build())
        .g(vec![neg(Y(0)), le(Y(0), 10.0)])
        .xb(0.0, 8.0)
        .yb(0.0, 10.0)
        .sol(Global, &[3.0], &[5.0])
        .build()
}

fn gumus_floudas_2001_ex5(o: &Params) -> Built {
    let mut lower = y_ge(2, 0.1);
    lower.extend(y_le(2, 10.0));
    lower.extend([
        sum(vec![monof(0.0332333, &[(Y(1), -1.0)]), lin(&[(Y(0), 0.1)], -1.0)]),
        sum(vec![
            monof(4.0, &[(X(0), 1.0), (Y(1), -1.0)]),
            monof(2.0, &[(X(0), -0.71), (Y(1), -1.0)]),
            monof(0.0332333, &[(X(0), -1.3)]),
            lin(&[], -1.0),
        ]),
    ]);
    P::new("GumusFloudas2001Ex5", "Gumus and Floudas (2001)", 1, 2)
        .with(o)
        .F(lin(&[(X(0), 1.0)], 0.0))
        .G(vec![ge(X(0), 0.1), le(X(0), 10.0)])
        .f(sum(vec![lin(&[(Y(0), -1.0)], 0.0), monof(0.5864, &[(Y(0), 0.67)])]))
        .g(lower)
        .xb(0.1, 10.0)
        .yb(0.1, 10.0)
        .dom_x(0, 0.1, 10.0)
        .dom_y(0, 0.1, 10.0)
        .dom_y(1, 0.1, 10.0)
        .guard(|x, y| {
            if x[0] > 0.0 && y[0] > 0.0 && y[1] > 0.0 {
                Ok(())
            } else {
                Err("x and y must be positive".to_string())
            }
        })
        .sol(Global, &[0.193616], &[9.9667667, 10.0])
        .build()
}

fn hatz_etal_2013(o: &Params) -> Built {
    P::new("HatzEtal2013", "Hatz et al. (2013)", 1, 2)
        .with(o)
        .F(lin(&[(X(0), -1.0), (Y(0), 2.0), (Y(1), 1.0)], 0.0))
        .f(Quad::new()
            .sq(1.0, &[(X(0), 1.0), (Y(0), -1.0)], 0.0)
            .bil(Y(1), Y(1), 1.0)
            .build())
        .g(neg_y(2))
        .yb(0.0, 10.0)
        .sol(Global, &[0.0], &[0.0, 0.0])
        .build()
}

fn henderson_quandt_1958(o: &Params) -> Built {
    P::new("HendersonQuandt1958", "Henderson and Quandt (1958)", 1, 1)
        .with(o)
        .F(Quad::new()
            .bil(X(0), X(0), 0.5)
            .bil(X(0), Y(0), 0.5)
            .lin(X(0), -95.0)
            .build())
        .G(vec![le(X(0), 200.0), neg(X(0))])
        .f(Quad::new()
            .bil(Y(0), Y(0), 1.0)
            .bil(X(0), Y(0), 0.5)
            .lin(Y(0), -100.0)
            .build())
        .g(vec![neg(Y(0))])
        .xb(0.0, 200.0)
        .yb(0.0, 100.0)
        .sol(Best, &[93.33333], &[26.667])
        .build()
}

fn henrion_surowiec_2011(o: &Params) -> Built {
    let mut b = P::new("HenrionSurowiec2011", "Henrion and Surowiec (2011)", 1, 1).with(o);
    let c = b.param("c", 1.0, None, "any real c");
    let r = c.abs().max(10.0);
    b.F(Quad::new().bil(X(0), X(0), 1.0).lin(Y(0), c).build())
        .f(Quad::new().bil(Y(0), Y(0), 0.5).bil(X(0), Y(0), -1.0).build())
        .xb(-r, r)
        .yb(-r, r)
        .sol(Global, &[-0.5 * c], &[-0.5 * c])
        .build()
}

fn ishizuka_aiyoshi_1992a(o: &Params) -> Built {
    let mut b = P::new("IshizukaAiyoshi1992a", "Ishizuka and Aiyoshi (1992)", 1, 2).with(o);
    let m = b.param("M", 10.0, Some((1.0, false)), "M > 1");
    b.F(mono_i(&[(X(0), 1), (Y(1), 2)]))
        .G(vec![lin(&[(X(0), -1.0)], -m)])
        .f(lin(&[(Y(0), 1.0)], 0.0))
        .g(vec![
            neg(X(0)),
            lin(&[(X(0), -1.0), (Y(0), -1.0)], 0.0),
            lin(&[(X(0), -1.0), (Y(0), 1.0)], 0.0),
            lin(&[(Y(0), -1.0), (Y(1), -1.0)], -m),
            lin(&[(Y(0), 1.0), (Y(1), 1.0)], -m),
        ])
        .xb(0.0, m)
        .ybi(0, -m, m)
        .ybi(1, -2.0 * m, 2.0 * m)
        .family(Global, (&[0.0], &[-m, 0.0]), (&[m], &[-m, 0.0]))
        .note("the stated family (x*, -M, 0) satisfies -x <= y_1 only at x* = M")
        .build()
}

fn mono_i(factors: &[(V, i32)]) -> Component {
    super::mono(1.0, factors)
}

fn kleniati_adjiman_2014_ex3(o: &Params) -> Built {
    P::new("KleniatiAdjiman2014Ex3", "Kleniati and Adjiman (2014)", 1, 1)
        .with(o)
        .F(lin(&[(X(0), 1.0), (Y(0), -1.0)], 0.0))
        .G(vec![ge(X(0), -1.0), le(X(0), 1.0)])
        .f(super::poly(&[(0.5, &[(X(0), 1), (Y(0), 2)]), (-1.0, &[(X(0), 1), (Y(0), 3)])], 0.0))
        .g(vec![ge(Y(0), -1.0), le(Y(0), 1.0)])
        .xb(-1.0, 1.0)
        .yb(-1.0, 1.0)
        .sol(Global, &[0.0], &[1.0])
        .build()
}

fn kleniati_adjiman_2014_ex4(o: &Params) -> Built {
    let mut upper = vec![
        sum(vec![mono_i(&[(Y(0), 1), (Y(1), 1)]), lin(&[(X(0), -1.0)], 0.0)]),
        mono_i(&[(X(1), 1), (Y(0), 2)]),
        sum(vec![lin(&[(X(0), 1.0), (Y(2), 1.0)], 0.0), super::exp_lin(-1.0, &[(X(1), 1.0)], 0.0)]),
    ];
    upper.extend(x_ge(5, -1.0));
    upper.extend(x_le(5, 1.0));
    let mut lower = vec![super::poly(&[(1.0, &[(X(0), 1)]), (-1.0, &[(Y(2), 2)])], -0.2)];
    lower.extend(y_ge(5, -1.0));
    lower.extend(y_le(5, 1.0));
    let mut fq = Quad::new();
    for i in 0..5 {
        fq = fq.bil(X(i), X(i), -1.0).bil(Y(i), Y(i), -1.0);
    }
    P::new("KleniatiAdjiman2014Ex4", "Kleniati and Adjiman (2014)", 5, 5)
        .with(o)
        .F(fq.build())
        .G(upper)
        .f(super::poly(
            &[
                (1.0, &[(Y(0), 3)]),
                (1.0, &[(Y(1), 2), (X(0), 1)]),
                (1.0, &[(Y(1), 2), (X(1), 1)]),
                (0.1, &[(Y(2), 1)]),
                (1.0, &[(Y(3), 2), (X(2), 1), (X(3), 1), (X(4), 1)]),
                (1.0, &[(Y(4), 2), (X(2), 1), (X(3), 1), (X(4), 1)]),
            ],
            0.0,
        ))
        .g(lower)
        .xb(-1.0, 1.0)
        .yb(-1.0, 1.0)
        .sol(Global, &[1.0, -1.0, -1.0, -1.0, -1.0], &[-1.0; 5])
        .build()
}

fn lampariello_sagratella_2017_ex23(o: &Params) -> Built {
    P::new("LamparielloSagratella2017Ex23", "Lampariello and Sagratella (2017)", 1, 2)
        .with(o)
        .F(lin(&[(X(0), 1.0)], 0.0))
        .G(vec![ge(X(0), -1.0), le(X(0), 1.0)])
        .f(Quad::new()
            .sq(1.0, &[(X(0), 1.0), (Y(0), -1.0)], 0.0)
            .sq(1.0, &[(Y(1), 1.0)], 1.0)
            .build())
        .g(vec![
            sum(vec![mono_i(&[(Y(0), 3)]), lin(&[(Y(1), -1.0)], 0.0)]),
            neg(Y(1)),
        ])
        .xb(-1.0, 1.0)
        .ybi(1, 0.0, 10.0)
        .sol(Best, &[-1.0], &[-1.0, 0.0])
        .build()
}

fn lampariello_sagratella_2017_ex31(o: &Params) -> Built {
    P::new("LamparielloSagratella2017Ex31", "Lampariello and Sagratella (2017)", 1, 1)
        .with(o)
        .F(Quad::new().bil(X(0), X(0), 1.0).bil(Y(0), Y(0), 1.0).build())
        .G(vec![ge(X(0), 1.0)])
        .f(lin(&[(Y(0), 1.0)], 0.0))
        .g(vec![lin(&[(X(0), -1.0), (Y(0), -1.0)], 1.0)])
        .xb(1.0, 10.0)
        .sol(Best, &[1.0], &[0.0])
        .build()
}

fn lampariello_sagratella_2017_ex32(o: &Params) -> Built {
    P::new("LamparielloSagratella2017Ex32", "Lampariello and Sagratella (2017)", 1, 1)
        .with(o)
        .F(Quad::new().bil(X(0), X(0), 1.0).bil(Y(0), Y(0), 1.0).build())
        .f(Quad::new().sq(1.0, &[(X(0), 1.0), (Y(0), 1.0)], -1.0).build())
        .sol(Best, &[0.5], &[0.5])
        .build()
}

fn lampariello_sagratella_2017_ex33(o: &Params) -> Built {
    let mut lower = vec![lin(&[(X(0), -1.0), (Y(0), -1.0), (Y(1), -1.0)], 1.0)];
    lower.extend(neg_y(2));
    P::new("LamparielloSagratella2017Ex33", "Lampariello and Sagratella (2017)", 1, 2)
        .with(o)
        .F(Quad::new()
            .bil(X(0), X(0), 1.0)
            .sq(1.0, &[(Y(0), 1.0), (Y(1), 1.0)], 0.0)
            .build())
        .G(vec![ge(X(0), 0.5)])
        .f(lin(&[(Y(0), 1.0)], 0.0))
        .g(lower)
        .xb(0.5, 10.0)
        .yb(0.0, 10.0)
        .sol(Best, &[0.5], &[0.0, 0.5])
        .build()
}

fn lampariello_sagratella_2017_ex35(o: &Params) -> Built {
    P::new("LamparielloSagratella2017Ex35", "Lampariello and Sagratella (2017)", 1, 1)
        .with(o)
        .F(Quad::new().bil(X(0), X(0), 1.0).bil(Y(0), Y(0), 1.0).build())
        .G(vec![ge(X(0), -1.0), le(X(0), 1.0)])
        .f(lin(&[(Y(0), -1.0)], 0.0))
        .g(vec![lin(&[(X(0), 2.0), (Y(0), 1.0)], -2.0), neg(Y(0)), le(Y(0), 1.0)])
        .xb(-1.0, 1.0)
        .yb(0.0, 1.0)
        .sol(Best, &[0.8], &[0.4])
        .build()
}

fn lucchetti_etal_1987(o: &Params) -> Built {
    P::new("LucchettiEtal1987", "Lucchetti et al. (1987)", 1, 1)
        .with(o)
        .F(Quad::new().lin(X(0), -0.5).cst(0.5).bil(X(0), Y(0), 1.0).build())
        .G(vec![neg(X(0)), le(X(0), 1.0)])
        .f(Quad::new().bil(X(0), Y(0), 1.0).lin(Y(0), -1.0).build())
        .g(vec![neg(Y(0)), le(Y(0), 1.0)])
        .xb(0.0, 1.0)
        .yb(0.0, 1.0)
        .sol(Global, &[1.0], &[0.0])
        .build()
}

const F_BASE: [(V, f64); 2] = [(Y(0), 0.2), (X(0), -1.0)];
const L_BASE: [(V, f64); 2] = [(Y(0), 1.5), (X(0), -1.0)];

fn lds_upper() -> Component {
    sum(vec![
        lin(&[], 2.0),
        decay(-1.0, &F_BASE, 0.6, 0.055, 0.4),
        decay(-0.8, &[(Y(0), 0.15), (X(0), 1.0)], -0.4, 0.3, 2.0),
    ])
}

fn lds_lower() -> Component {
    sum(vec![
        lin(&[], 2.0),
        decay(-1.0, &L_BASE, 0.0, 0.055, 0.4),
        decay(-0.8, &[(Y(0), 2.0), (X(0), 1.0)], -3.0, 0.5, 2.0),
    ])
}

fn upper_base(x: &[f64], y: &[f64]) -> f64 {
    (0.2 * y[0] - x[0] + 0.6).abs()
}

fn lower_base(x: &[f64], y: &[f64]) -> f64 {
    (1.5 * y[0] - x[0]).abs()
}

fn lds_box() -> Vec<Component> {
    vec![neg(X(0)), le(X(0), 1.0), neg(Y(0)), le(Y(0), 2.0)]
}

const CLAMP_NOTE: &str = "the base of each (.)^0.4 term is clamped at zero; the formula is undefined over the reals below it";

fn lu_deb_sinha_2016a(o: &Params) -> Built {
    P::new("LuDebSinha2016a", "Lu, Deb and Sinha (2016)", 1, 1)
        .with(o)
        .F(lds_upper())
        .G(lds_box())
        .f(lds_lower())
        .xb(0.0, 1.0)
        .yb(0.0, 2.0)
        .kink(1e-6, |x, y| upper_base(x, y).min(lower_base(x, y)))
        .note(CLAMP_NOTE)
        .no_kkt("nonsmooth lower level")
        .sol(Cited, &[1.4], &[0.2])
        .sol_note("cited point; x = 1.4 violates x <= 1")
        .sol(Best, &[0.0], &[1.5])
        .build()
}

fn lu_deb_sinha_2016b(o: &Params) -> Built {
    P::new("LuDebSinha2016b", "Lu, Deb and Sinha (2016)", 1, 1)
        .with(o)
        .F(Quad::new()
            .sq(1.0, &[(X(0), 1.0)], -0.5)
            .sq(1.0, &[(Y(0), 1.0)], -1.0)
            .build())
        .G(lds_box())
        .f(lds_lower())
        .xb(0.0, 1.0)
        .yb(0.0, 2.0)
        .kink(1e-6, lower_base)
        .note(CLAMP_NOTE)
        .no_kkt("nonsmooth lower level")
        .sol(Best, &[0.5], &[1.0])
        .build()
}

fn lu_deb_sinha_2016c(o: &Params) -> Built {
    P::new("LuDebSinha2016c", "Lu, Deb and Sinha (2016)", 1, 1)
        .with(o)
        .F(lds_upper())
        .G(lds_box())
        .f(Quad::new()
            .sq(1.0, &[(X(0), 1.0)], -0.5)
            .sq(1.0, &[(Y(0), 1.0)], -1.0)
            .build())
        .xb(0.0, 1.0)
        .yb(0.0, 2.0)
        .kink(1e-6, upper_base)
        .note(CLAMP_NOTE)
        .no_kkt("nonsmooth upper objective")
        .sol(Best, &[0.26], &[1.0])
        .build()
}

/// `b (v - k)^2` with `b = s·u + 16/7`, `s = 1/14`.
fn slope_sq(w: f64, u: V, v: V, k: f64) -> Component {
    prod(w, vec![fac(&[(u, 1.0 / 14.0)], 16.0 / 7.0, 1.0), fac(&[(v, 1.0)], -k, 2.0)])
}

/// `w [v + a - b][v + c - b]` with `b = u/14 + 16/7`.
fn shifted_pair(w: f64, u: V, v: V, a: f64, c: f64) -> Component {
    let t = [(v, 1.0), (u, -1.0 / 14.0)];
    prod(w, vec![fac(&t, a - 16.0 / 7.0, 1.0), fac(&t, c - 16.0 / 7.0, 1.0)])
}

fn lu_deb_sinha_2016d(o: &Params) -> Built {
    let plus = |c: Component, v: V, s: f64| sum(vec![c, lin(&[(v, s)], 0.0)]);
    let linear_slope = |w: f64, u: V, v: V| prod(w, vec![fac(&[(u, 1.0 / 14.0)], 16.0 / 7.0, 1.0), fac(&[(v, 1.0)], -5.0, 1.0)]);
    P::new("LuDebSinha2016d", "Lu, Deb and Sinha (2016)", 2, 2)
        .with(o)
        .F(lin(&[(X(1), -1.0)], 0.0))
        .G(vec![
            plus(slope_sq(-1.0, Y(0), X(0), 2.0), X(1), 1.0),
            plus(linear_slope(1.0, Y(0), X(0)), X(1), -1.0),
            plus(shifted_pair(-1.0, Y(0), X(0), 4.0, 8.0), X(1), 1.0),
            ge(X(0), -4.0),
            le(X(0), 10.0),
            ge(X(1), -100.0),
            le(X(1), 200.0),
            ge(Y(0), -4.0),
            le(Y(0), 10.0),
            ge(Y(1), -100.0),
            le(Y(1), 200.0),
        ])
        .f(lin(&[(Y(1), -1.0)], 0.0))
        .g(vec![
            plus(slope_sq(-1.0, X(0), Y(0), 2.0), Y(1), 1.0),
            plus(linear_slope(12.5, X(0), Y(0)), Y(1), -1.0),
            plus(shifted_pair(-5.0, X(0), Y(0), 4.0, 8.0), Y(1), 1.0),
        ])
        .xbi(0, -4.0, 10.0)
        .xbi(1, -100.0, 200.0)
        .ybi(0, -4.0, 10.0)
        .ybi(1, -100.0, 200.0)
        .note("the first block printed as g is read as the upper-level constraints G")
        .sol(Best, &[10.0, 192.0], &[10.0, 192.0])
        .build()
}

fn lu_deb_sinha_2016e(o: &Params) -> Built {
    let t = [(Y(0), 1.0), (X(0), -1.0)];
    P::new("LuDebSinha2016e", "Lu, Deb and Sinha (2016)", 1, 2)
        .with(o)
        .F(Quad::new()
            .sq(1.0 / 900.0, &[(Y(1), 1.0)], -50.0)
            .sq(25.0, &[(X(0), 1.0)], -2.5)
            .build())
        .G(vec![
            ge(X(0), 2.0),
            le(X(0), 3.0),
            ge(Y(0), -4.0),
            le(Y(0), 10.0),
            ge(Y(1), -100.0),
            le(Y(1), 200.0),
        ])
        .f(lin(&[(Y(1), -1.0)], 0.0))
        .g(vec![
            sum(vec![prod(-1.0, vec![fac(&[(X(0), 1.0)], 0.0, 1.0), fac(&[(Y(0), 1.0)], -2.0, 2.0)]), lin(&[(Y(1), 1.0)], 0.0)]),
            sum(vec![prod(12.5, vec![fac(&[(X(0), 1.0)], 0.0, 1.0), fac(&[(Y(0), 1.0)], -5.0, 1.0)]), lin(&[(Y(1), -1.0)], 0.0)]),
            sum(vec![prod(-5.0, vec![fac(&t, 4.0, 1.0), fac(&t, 8.0, 1.0)]), lin(&[(Y(1), 1.0)], 0.0)]),
        ])
        .xb(2.0, 3.0)
        .ybi(0, -4.0, 10.0)
        .ybi(1, -100.0, 200.0)
        .note("solution unknown")
        .build()
}

fn lu_deb_sinha_2016f(o: &Params) -> Built {
    let t = [(X(0), 0.05), (Y(0), -1.0)];
    P::new("LuDebSinha2016f", "Lu, Deb and Sinha (2016)", 2, 1)
        .with(o)
        .F(lin(&[(X(1), -1.0)], 0.0))
        .G(vec![
            ge(Y(0), 2.0),
            le(Y(0), 4.0),
            ge(X(0), -80.0),
            le(X(0), 200.0),
            ge(X(1), -100.0),
            le(X(1), 200.0),
            sum(vec![prod(-1.0, vec![fac(&[(Y(0), 1.0)], 0.0, 1.0), fac(&[(X(0), 0.05)], -2.0, 1.0)]), lin(&[(X(1), 1.0)], 0.0)]),
            sum(vec![prod(12.5, vec![fac(&[(Y(0), 1.0)], 0.0, 1.0), fac(&[(X(0), 0.05)], -5.0, 1.0)]), lin(&[(X(1), -1.0)], 0.0)]),
            sum(vec![prod(-5.0, vec![fac(&t, 4.0, 1.0), fac(&t, 8.0, 1.0)]), lin(&[(X(1), 1.0)], 0.0)]),
        ])
        .f(Quad::new()
            .sq(1.0 / 784.0, &[(X(0), 1.0)], -50.0)
            .sq(25.0, &[(Y(0), 1.0)], -2.5)
            .build())
        .xbi(0, -80.0, 200.0)
        .xbi(1, -100.0, 200.0)
        .yb(2.0, 4.0)
        .note("solution unknown")
        .build()
}
