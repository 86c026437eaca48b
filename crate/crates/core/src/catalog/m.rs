use std::sync::Arc;

use super::{decay, exp_lin, mono, mul, poly, sum, Best, Built, Global, P};
use crate::jet::{custom, ge, le, lin, neg, neg_x, neg_y, x_ge, x_le, y_ge, y_le, Component, Quad, X, Y};
use crate::model::Params;

pub(super) const ALL: &[fn(&Params) -> Built] = &[
    macal_hurter_1997,
    mirrlees_1999,
    mitsos_barton_2006_ex38,
    mitsos_barton_2006_ex39,
    mitsos_barton_2006_ex310,
    mitsos_barton_2006_ex311,
    mitsos_barton_2006_ex312,
    mitsos_barton_2006_ex313,
    mitsos_barton_2006_ex314,
    mitsos_barton_2006_ex315,
    mitsos_barton_2006_ex316,
    mitsos_barton_2006_ex317,
    mitsos_barton_2006_ex318,
    mitsos_barton_2006_ex319,
    mitsos_barton_2006_ex320,
    mitsos_barton_2006_ex321,
    mitsos_barton_2006_ex322,
    mitsos_barton_2006_ex323,
    mitsos_barton_2006_ex324,
    mitsos_barton_2006_ex325,
    mitsos_barton_2006_ex326,
    mitsos_barton_2006_ex327,
    mitsos_barton_2006_ex328,
    morgan_patrone_2006a,
    morgan_patrone_2006b,
    morgan_patrone_2006c,
    muu_quy_2003_ex1,
    muu_quy_2003_ex2,
];

const MB: &str = "Mitsos and Barton (2006)";

fn macal_hurter_1997(o: &Params) -> Built {
    P::new("MacalHurter1997", "Macal and Hurter (1997)", 1, 1)
        .with(o)
        .F(Quad::new()
            .sq(1.0, &[(X(0), 1.0)], -1.0)
            .sq(1.0, &[(Y(0), 1.0)], -1.0)
            .build())
        .f(Quad::new()
            .bil(Y(0), Y(0), 0.5)
            .lin(Y(0), 500.0)
            .bil(X(0), Y(0), -50.0)
            .build())
        .xb(0.0, 20.0)
        .yb(-500.0, 500.0)
        .sol(Global, &[10.0163], &[0.8197])
        .sol_note("stored as stated; the lower-level response at x = 10.0163 is y = 0.815")
        .build()
}

fn mirrlees_1999(o: &Params) -> Built {
    P::new("Mirrlees1999", "Mirrlees (1999)", 1, 1)
        .with(o)
        .F(Quad::new()
            .sq(1.0, &[(X(0), 1.0)], -2.0)
            .sq(1.0, &[(Y(0), 1.0)], -1.0)
            .build())
        .f(sum(vec![
            mul(lin(&[(X(0), -1.0)], 0.0), decay(1.0, &[(Y(0), 1.0)], 1.0, 1.0, 2.0)),
            decay(-1.0, &[(Y(0), 1.0)], -1.0, 1.0, 2.0),
        ]))
        .yb(-3.0, 3.0)
        .no_kkt("nonconvex lower level")
        .sol(Best, &[1.0], &[0.95753])
        .build()
}

/// Rows `-y - 1` and `y - 1`.
fn unit_y(ny: usize) -> Vec<Component> {
    let mut r = y_ge(ny, -1.0);
    r.extend(y_le(ny, 1.0));
    r
}

fn unit_x(nx: usize) -> Vec<Component> {
    let mut r = x_ge(nx, -1.0);
    r.extend(x_le(nx, 1.0));
    r
}

/// One-dimensional Mitsos-Barton layout: `x, y ∈ [-1, 1]` at both levels.
fn mb(name: &'static str, o: &Params) -> P {
    P::new(name, MB, 1, 1).with(o).G(unit_x(1)).g(unit_y(1)).xb(-1.0, 1.0).yb(-1.0, 1.0)
}

fn mitsos_barton_2006_ex38(o: &Params) -> Built {
    let shift = custom(|x, _y, j| {
        let e = x[0].exp();
        j.set(x[0] + e);
        j.dx(0, 1.0 + e);
        j.dxx(0, 0, e);
    });
    P::new("MitsosBarton2006Ex38", MB, 1, 1)
        .with(o)
        .F(Quad::new().bil(Y(0), Y(0), 1.0).build())
        .G(vec![ge(X(0), -1.0), le(X(0), 1.0), ge(Y(0), -0.1), le(Y(0), 0.1)])
        .f(mul(shift, lin(&[(Y(0), 1.0)], 0.0)))
        .g(unit_y(1))
        .xb(-1.0, 1.0)
        .yb(-1.0, 1.0)
        .sol(Global, &[-0.567], &[0.0])
        .build()
}

fn mitsos_barton_2006_ex39(o: &Params) -> Built {
    P::new("MitsosBarton2006Ex39", MB, 1, 1)
        .with(o)
        .F(lin(&[(X(0), 1.0)], 0.0))
        .G(vec![lin(&[(X(0), -1.0), (Y(0), 1.0)], 0.0), ge(X(0), -10.0), le(X(0), 10.0)])
        .f(mono(1.0, &[(Y(0), 3)]))
        .g(unit_y(1))
        .xb(-10.0, 10.0)
        .yb(-1.0, 1.0)
        .note("the row printed as -x + 10 is read as -x - 10 (the box -10 <= x <= 10); as printed it forces x = 10")
        .sol(Global, &[-1.0], &[-1.0])
        .build()
}

/// `x (16y⁴ + 2y³ - 8y² - 1.5y + 0.5)`
fn quartic_scaled() -> Component {
    poly(
        &[
            (16.0, &[(X(0), 1), (Y(0), 4)]),
            (2.0, &[(X(0), 1), (Y(0), 3)]),
            (-8.0, &[(X(0), 1), (Y(0), 2)]),
            (-1.5, &[(X(0), 1), (Y(0), 1)]),
            (0.5, &[(X(0), 1)]),
        ],
        0.0,
    )
}

fn mitsos_barton_2006_ex310(o: &Params) -> Built {
    P::new("MitsosBarton2006Ex310", MB, 1, 1)
        .with(o)
        .F(lin(&[(Y(0), 1.0)], 0.0))
        .G(vec![ge(X(0), 0.1), le(X(0), 1.0)])
        .f(quartic_scaled())
        .g(unit_y(1))
        .xb(0.1, 1.0)
        .yb(-1.0, 1.0)
        .family(Global, (&[0.1], &[0.5]), (&[1.0], &[0.5]))
        .build()
}

fn mitsos_barton_2006_ex311(o: &Params) -> Built {
    P::new("MitsosBarton2006Ex311", MB, 1, 1)
        .with(o)
        .F(lin(&[(Y(0), 1.0)], 0.0))
        .G(unit_x(1))
        .f(quartic_scaled())
        .g(vec![ge(Y(0), -0.8), le(Y(0), 1.0)])
        .xb(-1.0, 1.0)
        .yb(-0.8, 1.0)
        .sol(Global, &[0.0], &[-0.8])
        .build()
}

fn mitsos_barton_2006_ex312(o: &Params) -> Built {
    mb("MitsosBarton2006Ex312", o)
        .F(Quad::new()
            .lin(X(0), -1.0)
            .bil(X(0), Y(0), 1.0)
            .bil(Y(0), Y(0), 10.0)
            .build())
        .f(poly(&[(-1.0, &[(X(0), 1), (Y(0), 2)]), (0.5, &[(Y(0), 4)])], 0.0))
        .sol(Global, &[0.0], &[0.0])
        .build()
}

fn mitsos_barton_2006_ex313(o: &Params) -> Built {
    mb("MitsosBarton2006Ex313", o)
        .F(lin(&[(X(0), 1.0), (Y(0), -1.0)], 0.0))
        .f(poly(&[(0.5, &[(X(0), 1), (Y(0), 2)]), (-1.0, &[(X(0), 3), (Y(0), 1)])], 0.0))
        .sol(Global, &[0.0], &[1.0])
        .build()
}

fn mitsos_barton_2006_ex314(o: &Params) -> Built {
    mb("MitsosBarton2006Ex314", o)
        .F(Quad::new()
            .sq(1.0, &[(X(0), 1.0)], -0.25)
            .bil(Y(0), Y(0), 1.0)
            .build())
        .f(poly(&[(1.0 / 3.0, &[(Y(0), 3)]), (-1.0, &[(X(0), 1), (Y(0), 1)])], 0.0))
        .sol(Global, &[0.25], &[0.5])
        .build()
}

fn mitsos_barton_2006_ex315(o: &Params) -> Built {
    mb("MitsosBarton2006Ex315", o)
        .F(lin(&[(X(0), 1.0), (Y(0), 1.0)], 0.0))
        .f(poly(&[(0.5, &[(X(0), 1), (Y(0), 2)]), (-1.0 / 3.0, &[(Y(0), 3)])], 0.0))
        .sol(Global, &[-1.0], &[1.0])
        .build()
}

fn mitsos_barton_2006_ex316(o: &Params) -> Built {
    mb("MitsosBarton2006Ex316", o)
        .F(lin(&[(X(0), 2.0), (Y(0), 1.0)], 0.0))
        .f(poly(&[(-0.5, &[(X(0), 1), (Y(0), 2)]), (-0.25, &[(Y(0), 4)])], 0.0))
        .sol(Global, &[-1.0], &[0.0])
        .sol(Global, &[-0.5], &[-1.0])
        .build()
}

fn mitsos_barton_2006_ex317(o: &Params) -> Built {
    mb("MitsosBarton2006Ex317", o)
        .F(Quad::new()
            .sq(1.0, &[(X(0), 1.0)], 0.5)
            .bil(Y(0), Y(0), 0.5)
            .build())
        .f(poly(&[(0.5, &[(X(0), 1), (Y(0), 2)]), (0.25, &[(Y(0), 4)])], 0.0))
        .sol(Global, &[-0.25], &[0.5])
        .sol(Global, &[-0.25], &[-0.5])
        .build()
}

fn mitsos_barton_2006_ex318(o: &Params) -> Built {
    mb("MitsosBarton2006Ex318", o)
        .F(Quad::new().bil(X(0), X(0), -1.0).bil(Y(0), Y(0), 1.0).build())
        .f(poly(&[(1.0, &[(X(0), 1), (Y(0), 2)]), (-0.5, &[(Y(0), 4)])], 0.0))
        .sol(Global, &[0.5], &[0.0])
        .build()
}

fn mitsos_barton_2006_ex319(o: &Params) -> Built {
    mb("MitsosBarton2006Ex319", o)
        .F(Quad::new()
            .bil(X(0), Y(0), 1.0)
            .lin(Y(0), -1.0)
            .bil(Y(0), Y(0), 0.5)
            .build())
        .f(poly(&[(-1.0, &[(X(0), 1), (Y(0), 2)]), (0.5, &[(Y(0), 4)])], 0.0))
        .note("listed under the file name MitsosBarton06Ex319")
        .sol(Global, &[0.189], &[0.4343])
        .build()
}

fn mitsos_barton_2006_ex320(o: &Params) -> Built {
    mb("MitsosBarton2006Ex320", o)
        .F(Quad::new()
            .sq(1.0, &[(X(0), 1.0)], -0.25)
            .bil(Y(0), Y(0), 1.0)
            .build())
        .f(poly(&[(1.0 / 3.0, &[(Y(0), 3)]), (-1.0, &[(X(0), 2), (Y(0), 1)])], 0.0))
        .sol(Global, &[0.5], &[0.5])
        .build()
}

fn ex321_lower() -> Component {
    poly(
        &[
            (1.0, &[(Y(0), 4)]),
            (4.0 / 30.0, &[(Y(0), 3)]),
            (-4.0 / 30.0, &[(X(0), 1), (Y(0), 3)]),
            (-0.02, &[(X(0), 2), (Y(0), 2)]),
            (0.16, &[(X(0), 1), (Y(0), 2)]),
            (-0.4, &[(Y(0), 2)]),
            (0.004, &[(X(0), 3), (Y(0), 1)]),
            (-0.036, &[(X(0), 2), (Y(0), 1)]),
            (0.08, &[(X(0), 1), (Y(0), 1)]),
        ],
        0.0,
    )
}

fn ex321_upper() -> Component {
    Quad::new()
        .sq(1.0, &[(X(0), 1.0)], 0.6)
        .bil(Y(0), Y(0), 1.0)
        .build()
}

fn mitsos_barton_2006_ex321(o: &Params) -> Built {
    mb("MitsosBarton2006Ex321", o)
        .F(ex321_upper())
        .f(ex321_lower())
        .sol(Global, &[-0.5545], &[0.4554])
        .build()
}

fn mitsos_barton_2006_ex322(o: &Params) -> Built {
    let mut lower = unit_y(1);
    lower.push(sum(vec![
        Quad::new().sq(0.01, &[(X(0), 1.0)], 1.0).build(),
        mono(-1.0, &[(Y(0), 2)]),
    ]));
    P::new("MitsosBarton2006Ex322", MB, 1, 1)
        .with(o)
        .F(ex321_upper())
        .G(unit_x(1))
        .f(ex321_lower())
        .g(lower)
        .xb(-1.0, 1.0)
        .yb(-1.0, 1.0)
        .sol(Global, &[-0.5545], &[0.4554])
        .build()
}

fn mitsos_barton_2006_ex323(o: &Params) -> Built {
    let mut upper = unit_x(1);
    upper.push(Quad::new().bil(X(0), X(0), -9.0).lin(X(0), 1.0).lin(Y(0), -1.0).cst(1.0).build());
    let mut lower = unit_y(1);
    lower.push(poly(&[(1.0, &[(Y(0), 2), (X(0), 1)]), (-0.5, &[(Y(0), 2)])], 0.0));
    P::new("MitsosBarton2006Ex323", MB, 1, 1)
        .with(o)
        .F(Quad::new().bil(X(0), X(0), 1.0).build())
        .G(upper)
        .f(lin(&[(Y(0), 1.0)], 0.0))
        .g(lower)
        .xb(-1.0, 1.0)
        .yb(-1.0, 1.0)
        .sol(Global, &[-0.4191], &[-1.0])
        .build()
}

fn mitsos_barton_2006_ex324(o: &Params) -> Built {
    P::new("MitsosBarton2006Ex324", MB, 1, 1)
        .with(o)
        .F(Quad::new().bil(X(0), X(0), 1.0).lin(Y(0), -1.0).build())
        .G(vec![neg(X(0)), le(X(0), 1.0)])
        .f(Quad::new()
            .sq(1.0, &[(Y(0), 1.0), (X(0), -0.1)], -1.0)
            .cst(-0.5)
            .bil(X(0), X(0), -0.5)
            .build())
        .g(vec![neg(Y(0)), le(Y(0), 3.0)])
        .xb(0.0, 1.0)
        .yb(0.0, 3.0)
        .sol(Global, &[0.2106], &[1.799])
        .build()
}

fn mitsos_barton_2006_ex325(o: &Params) -> Built {
    let mut upper = unit_x(2);
    upper.extend([
        poly(&[(0.1, &[(Y(0), 1), (Y(1), 1)]), (-1.0, &[(X(0), 2)])], 0.0),
        mono(1.0, &[(X(1), 1), (Y(0), 2)]),
    ]);
    let mut lower = unit_y(3);
    lower.extend([
        poly(&[(1.0, &[(Y(0), 2)]), (-1.0, &[(Y(1), 1), (Y(2), 1)])], 0.0),
        poly(&[(1.0, &[(Y(1), 2), (Y(2), 1)]), (-1.0, &[(Y(0), 1), (X(0), 1)])], 0.0),
        poly(&[(-1.0, &[(Y(2), 2)])], 0.1),
    ]);
    P::new("MitsosBarton2006Ex325", MB, 2, 3)
        .with(o)
        .F(poly(
            &[
                (1.0, &[(X(0), 1), (Y(0), 1)]),
                (1.0, &[(X(1), 1), (Y(0), 2)]),
                (-1.0, &[(X(0), 1), (X(1), 1), (Y(2), 1)]),
            ],
            0.0,
        ))
        .G(upper)
        .f(poly(&[(1.0, &[(X(0), 1), (Y(0), 2)]), (1.0, &[(X(1), 1), (Y(1), 1), (Y(2), 1)])], 0.0))
        .g(lower)
        .xb(-1.0, 1.0)
        .yb(-1.0, 1.0)
        .sol_v(Best, &[-1.0, -1.0], &[-1.0, 1.0, 1.0], Some(-1.0), None)
        .build()
}

fn mitsos_barton_2006_ex326(o: &Params) -> Built {
    let sq_norm = |c: f64, k: f64| {
        poly(&[(c, &[(Y(0), 2)]), (c, &[(Y(1), 2)]), (c, &[(Y(2), 2)])], k)
    };
    let mut upper = vec![poly(&[(-1.0, &[(X(0), 2)])], 0.1), sq_norm(-1.0, 1.5), sq_norm(1.0, -2.5)];
    upper.extend(unit_x(2));
    P::new("MitsosBarton2006Ex326", MB, 2, 3)
        .with(o)
        .F(poly(
            &[
                (1.0, &[(X(0), 1), (Y(0), 1)]),
                (1.0, &[(X(1), 1), (Y(1), 2)]),
                (1.0, &[(X(0), 1), (X(1), 1), (Y(2), 3)]),
            ],
            0.0,
        ))
        .G(upper)
        .f(poly(
            &[
                (1.0, &[(X(0), 1), (Y(0), 2)]),
                (1.0, &[(X(1), 1), (Y(1), 2)]),
                (1.0, &[(X(0), 1), (Y(2), 2)]),
                (-1.0, &[(X(1), 1), (Y(2), 2)]),
            ],
            0.0,
        ))
        .g(unit_y(3))
        .xb(-1.0, 1.0)
        .yb(-1.0, 1.0)
        .note("the row printed as 2.5 + |y|^2 is read as -2.5 + |y|^2; as printed no point is feasible")
        .sol(Global, &[-1.0, -1.0], &[1.0, 1.0, -0.707])
        .build()
}

/// Shared data of the two five-dimensional Mitsos-Barton problems; `sign`
/// is the sign of the upper objective.
fn mb_five(name: &'static str, sign: f64, o: &Params) -> P {
    let mut upper = unit_x(5);
    upper.extend([
        sum(vec![mono(1.0, &[(Y(0), 1), (Y(1), 1)]), lin(&[(X(0), -1.0)], 0.0)]),
        mono(1.0, &[(X(1), 1), (Y(0), 2)]),
        sum(vec![lin(&[(X(0), 1.0), (Y(2), 1.0)], 0.0), exp_lin(-1.0, &[(X(1), 1.0)], 0.0)]),
    ]);
    let mut lower = unit_y(5);
    lower.extend([
        poly(&[(1.0, &[(Y(0), 1), (Y(1), 1)])], -0.3),
        poly(&[(1.0, &[(X(0), 1)]), (-1.0, &[(Y(2), 2)])], -0.2),
        sum(vec![exp_lin(-1.0, &[(Y(2), 1.0)], 0.0), poly(&[(1.0, &[(Y(3), 1), (Y(4), 1)])], -0.1)]),
    ]);
    let mut fu = Quad::new();
    for i in 0..5 {
        fu = fu.bil(X(i), X(i), sign).bil(Y(i), Y(i), sign);
    }
    P::new(name, MB, 5, 5)
        .with(o)
        .F(fu.build())
        .G(upper)
        .f(poly(
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
}

fn mitsos_barton_2006_ex327(o: &Params) -> Built {
    mb_five("MitsosBarton2006Ex327", 1.0, o)
        .sol_v(Best, &[0.0; 5], &[-1.0, 0.0, -1.0, 0.0, 0.0], Some(2.0), None)
        .build()
}

fn mitsos_barton_2006_ex328(o: &Params) -> Built {
    mb_five("MitsosBarton2006Ex328", -1.0, o)
        .sol_v(Best, &[1.0, -1.0, -1.0, -1.0, -1.0], &[-1.0, 1.0, -1.0, -1.0, 1.0], Some(-10.0), Some(-3.1))
        .sol_v(Best, &[-1.0; 5], &[1.0, -1.0, -1.0, -1.0, 1.0], Some(-10.0), Some(-3.1))
        .build()
}

fn morgan_patrone_2006a(o: &Params) -> Built {
    P::new("MorganPatrone2006a", "Morgan and Patrone (2006)", 1, 1)
        .with(o)
        .F(lin(&[(X(0), -1.0), (Y(0), -1.0)], 0.0))
        .G(vec![ge(X(0), -0.5), le(X(0), 0.5)])
        .f(mono(1.0, &[(X(0), 1), (Y(0), 1)]))
        .g(vec![ge(Y(0), -1.0), le(Y(0), 1.0)])
        .xb(-0.5, 0.5)
        .yb(-1.0, 1.0)
        .sol(Best, &[0.0], &[1.0])
        .build()
}

/// `(x + a) y` left of `-a`, `0` on `[-a, a)`, `(x - a) y` from `a` on.
fn dead_zone(a: f64) -> Component {
    Arc::new(move |x, y, j| {
        let shift = if x[0] < -a {
            a
        } else if x[0] < a {
            j.set(0.0);
            return;
        } else {
            -a
        };
        j.set((x[0] + shift) * y[0]);
        j.dx(0, y[0]);
        j.dy(0, x[0] + shift);
        j.dxy(0, 0, 1.0);
    })
}

fn morgan_patrone(name: &'static str, a: f64, b: f64, o: &Params) -> P {
    P::new(name, "Morgan and Patrone (2006)", 1, 1)
        .with(o)
        .F(lin(&[(X(0), -1.0), (Y(0), -1.0)], 0.0))
        .f(dead_zone(a))
        .g(vec![ge(X(0), -b), le(X(0), b), ge(Y(0), -1.0), le(Y(0), 1.0)])
        .xb(-b, b)
        .yb(-1.0, 1.0)
        .piecewise()
        .kink(1e-8, move |x, _| (x[0] - a).abs().min((x[0] + a).abs()))
        .no_kkt("piecewise lower level")
}

fn morgan_patrone_2006b(o: &Params) -> Built {
    morgan_patrone("MorganPatrone2006b", 0.25, 0.5, o)
        .sol(Best, &[0.25], &[1.0])
        .build()
}

fn morgan_patrone_2006c(o: &Params) -> Built {
    morgan_patrone("MorganPatrone2006c", 1.75, 2.0, o)
        .note("the branch printed as x + -7/4 is read as (x + 7/4) y, continuous with the middle branch")
        .sol(Best, &[2.0], &[-1.0])
        .build()
}

fn muu_quy_2003_ex1(o: &Params) -> Built {
    let mut lower = vec![lin(&[(Y(0), 2.0), (Y(1), 1.0), (X(0), -2.0)], -1.0)];
    lower.extend(neg_y(2));
    P::new("MuuQuy2003Ex1", "Muu and Quy (2003)", 1, 2)
        .with(o)
        .F(Quad::new()
            .bil(Y(0), Y(0), 1.0)
            .bil(Y(1), Y(1), 1.0)
            .bil(X(0), X(0), 1.0)
            .lin(X(0), -4.0)
            .build())
        .G(vec![neg(X(0)), le(X(0), 2.0)])
        .f(Quad::new()
            .bil(Y(0), Y(0), 1.0)
            .bil(Y(1), Y(1), 0.5)
            .bil(Y(0), Y(1), 1.0)
            .lin(Y(0), 1.0)
            .bil(X(0), Y(0), -3.0)
            .lin(Y(1), 1.0)
            .bil(X(0), Y(1), 1.0)
            .build())
        .g(lower)
        .xb(0.0, 2.0)
        .yb(0.0, 10.0)
        .sol(Best, &[0.8438], &[0.7657, 0.0])
        .build()
}

fn muu_quy_2003_ex2(o: &Params) -> Built {
    let mut upper = neg_x(2);
    upper.push(lin(&[(X(0), 1.0), (X(1), 1.0)], -1.0));
    let mut lower = vec![lin(&[(Y(0), 2.0), (Y(1), 1.0), (Y(2), -1.0), (X(0), 1.0), (X(1), -2.0)], 2.0)];
    lower.extend(neg_y(3));
    P::new("MuuQuy2003Ex2", "Muu and Quy (2003)", 2, 3)
        .with(o)
        .F(Quad::new()
            .bil(Y(0), Y(0), 1.0)
            .bil(Y(2), Y(2), 1.0)
            .bil(Y(0), Y(2), -1.0)
            .lin(Y(1), -4.0)
            .lin(X(0), -7.0)
            .lin(X(1), 4.0)
            .build())
        .G(upper)
        .f(Quad::new()
            .bil(Y(0), Y(0), 1.0)
            .bil(Y(1), Y(1), 0.5)
            .bil(Y(2), Y(2), 0.5)
            .bil(Y(0), Y(1), 1.0)
            .lin(Y(0), 1.0)
            .bil(X(0), Y(0), -3.0)
            .lin(Y(1), 1.0)
            .bil(X(1), Y(1), 1.0)
            .build())
        .g(lower)
        .xb(0.0, 1.0)
        .yb(0.0, 10.0)
        .sol(Best, &[0.609, 0.391], &[0.0, 0.0, 1.828])
        .build()
}
