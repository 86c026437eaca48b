use super::{exp_lin, pow_lin, ratio_lin, sum, Built, P, Best, Global, Local};
use crate::jet::{affine, lin, neg, neg_x, neg_y, quadratic_form, le, Quad, X, Y};
use crate::model::Params;

pub(super) const ALL: &[fn(&Params) -> Built] = &[
    calamai_vicente_1994a,
    calamai_vicente_1994b,
    calamai_vicente_1994c,
    calvete_gale_1999_p1,
    clark_westerberg_1990a,
    colson_2002_bipa1,
    colson_2002_bipa2,
    colson_2002_bipa3,
    colson_2002_bipa4,
    colson_2002_bipa5,
];

fn calamai_vicente_1994a(o: &Params) -> Built {
    let mut b = P::new("CalamaiVicente1994a", "Calamai and Vicente (1994)", 1, 1).with(o);
    let rho = b.param("rho", 1.0, Some((1.0, true)), "rho >= 1");
    let hi = rho.max(10.0);
    let b = b
        .F(Quad::new().sq(0.5, &[(X(0), 1.0)], -1.0).bil(Y(0), Y(0), 0.5).build())
        .f(Quad::new().lin(Y(0), 0.5).bil(X(0), Y(0), -1.0).build())
        .g(vec![
            lin(&[(X(0), 1.0), (Y(0), -1.0)], -1.0),
            lin(&[(X(0), -1.0), (Y(0), -1.0)], 1.0),
            lin(&[(X(0), 1.0), (Y(0), 1.0)], -rho),
        ])
        .xb(-10.0, hi)
        .yb(0.0, hi);
    if rho == 1.0 {
        b.sol(Global, &[1.0], &[0.0])
    } else if rho < 2.0 {
        b.sol(Global, &[0.5 * (1.0 + rho)], &[0.5 * (rho - 1.0)]).sol(Local, &[0.5], &[0.5])
    } else if rho == 2.0 {
        b.sol(Global, &[0.5], &[0.5]).sol(Global, &[1.5], &[0.5])
    } else {
        b.sol(Global, &[0.5], &[0.5])
    }
    .build()
}

fn calamai_vicente_1994b(o: &Params) -> Built {
    P::new("CalamaiVicente1994b", "Calamai and Vicente (1994)", 4, 2)
        .with(o)
        .F(Quad::new()
            .sq(0.5, &[(X(0), 1.0)], -1.0)
            .sq(0.5, &[(X(1), 1.0)], -1.0)
            .sq(0.5, &[(X(2), 1.0)], -1.0)
            .sq(0.5, &[(X(3), 1.0)], -1.0)
            .bil(Y(0), Y(0), 1.0)
            .bil(Y(1), Y(1), 1.0)
            .build())
        .f(Quad::new()
            .bil(Y(0), Y(0), 0.5)
            .bil(X(0), Y(0), -1.0)
            .bil(Y(1), Y(1), 0.5)
            .bil(X(1), Y(1), -1.0)
            .build())
        .g(vec![
            lin(&[(X(0), 1.0), (Y(0), -1.0)], -1.0),
            lin(&[(X(1), 1.0), (Y(1), -1.0)], -1.0),
            lin(&[(X(0), -1.0), (Y(0), -1.0)], 1.0),
            lin(&[(X(1), -1.0), (Y(1), -1.0)], 1.0),
            lin(&[(X(0), 1.0), (Y(0), 1.0)], -1.5),
            lin(&[(X(0), 1.0), (Y(1), 1.0)], -3.0),
        ])
        .yb(0.0, 10.0)
        .note("the vector rows x - y - 1 and -x - y + 1 pair y_i with x_i for i = 1, 2")
        .note("solution unknown")
        .build()
}

fn calamai_vicente_1994c(o: &Params) -> Built {
    #[rustfmt::skip]
    let a = [
        [197.2, 32.4, -129.6, -43.2],
        [32.4, 110.8, -43.2, -14.4],
        [-129.6, -43.2, 302.8, -32.4],
        [-43.2, -14.4, -32.4, 289.2],
    ];
    let av = [-8.56, -9.52, -9.92, -16.64];
    let c = [[-132.4, -10.8], [-10.8, -103.6], [43.2, 14.4], [14.4, 4.8]];
    #[rustfmt::skip]
    let d = [
        [13.24, 1.08, -4.32, -1.44],
        [1.08, 10.36, -1.44, -0.48],
        [13.24, 1.08, -4.32, -1.44],
        [1.08, 10.36, -1.44, -0.48],
        [-13.24, -1.08, 4.32, 1.44],
        [-1.08, -10.36, 1.44, 0.48],
    ];
    let e = [[-10.0, 0.0], [0.0, -10.0], [10.0, 0.0], [0.0, 10.0], [-10.0, 0.0], [0.0, -10.0]];
    let dv = [-1.0, -1.0, -1.5, -3.0, 1.0, 1.0];

    let n = 6;
    let mut hu = vec![0.0; n * n];
    let mut hl = vec![0.0; n * n];
    for i in 0..4 {
        for k in 0..4 {
            hu[i * n + k] = a[i][k];
        }
    }
    for i in 0..2 {
        hu[(4 + i) * n + 4 + i] = 100.0;
        hl[(4 + i) * n + 4 + i] = 100.0;
        for k in 0..4 {
            hl[(4 + i) * n + k] = c[k][i];
            hl[k * n + 4 + i] = c[k][i];
        }
    }
    let mut cu = av.to_vec();
    cu.extend([0.0, 0.0]);
    P::new("CalamaiVicente1994c", "Calamai and Vicente (1994)", 4, 2)
        .with(o)
        .F(quadratic_form(4, 2, hu, cu, 2.0))
        .f(quadratic_form(4, 2, hl, vec![0.0; n], 0.0))
        .g((0..6).map(|r| affine(&d[r], &e[r], dv[r])).collect())
        .yb(0.0, 10.0)
        .values(Some(0.3125), None)
        .note("the entry printed as -1.44x_4 in row 3 of D is read as the coefficient -1.44")
        .build()
}

fn calvete_gale_1999_p1(o: &Params) -> Built {
    let den = [(X(0), 2.0), (Y(0), 1.0), (Y(1), 1.0), (Y(2), -3.0)];
    let mut lower = neg_y(3);
    lower.extend([
        lin(&[(Y(0), -1.0), (Y(1), 1.0), (Y(2), 1.0)], -1.0),
        lin(&[(X(0), 2.0), (Y(0), -1.0), (Y(1), 2.0), (Y(2), -0.5)], -1.0),
        lin(&[(X(1), 2.0), (Y(0), 2.0), (Y(1), -1.0), (Y(2), -0.5)], -1.0),
    ]);
    P::new("CalveteGale1999P1", "Calvete and Gale (1999)", 2, 3)
        .with(o)
        .F(lin(&[(X(0), -8.0), (X(1), -4.0), (Y(0), 1.0), (Y(1), -40.0), (Y(2), -4.0)], 0.0))
        .G(neg_x(2))
        .f(ratio_lin(
            &[(X(0), 1.0), (X(1), 1.0), (Y(0), 2.0), (Y(1), -1.0), (Y(2), 1.0)],
            1.0,
            &den,
            6.0,
        ))
        .g(lower)
        .xb(0.0, 10.0)
        .yb(0.0, 10.0)
        .dom_y(2, 0.0, 1.9)
        .guard(|x, y| {
            let d = 6.0 + 2.0 * x[0] + y[0] + y[1] - 3.0 * y[2];
            if d > 0.0 {
                Ok(())
            } else {
                Err(format!("denominator of f is {d}"))
            }
        })
        .sol_v(Best, &[0.0, 0.9], &[0.0, 0.6, 0.4], Some(-29.2), None)
        .build()
}

fn clark_westerberg_1990a(o: &Params) -> Built {
    P::new("ClarkWesterberg1990a", "Clark and Westerberg (1990)", 1, 1)
        .with(o)
        .F(Quad::new()
            .sq(1.0, &[(X(0), 1.0)], -3.0)
            .sq(1.0, &[(Y(0), 1.0)], -2.0)
            .build())
        .G(vec![le(X(0), 8.0), neg(X(0))])
        .f(Quad::new().sq(1.0, &[(Y(0), 1.0)], -5.0).build())
        .g(vec![
            lin(&[(X(0), -2.0), (Y(0), 1.0)], -1.0),
            lin(&[(X(0), 1.0), (Y(0), -2.0)], -2.0),
            lin(&[(X(0), 1.0), (Y(0), 2.0)], -14.0),
        ])
        .xb(0.0, 8.0)
        .yb(-1.0, 7.0)
        .sol(Best, &[1.0], &[3.0])
        .build()
}

fn colson_2002_bipa1(o: &Params) -> Built {
    P::new("Colson2002BIPA1", "Colson (2002)", 1, 1)
        .with(o)
        .F(sum(vec![
            pow_lin(1.0, &[(X(0), -1.0)], 10.0, 3.0),
            pow_lin(1.0, &[(Y(0), -1.0)], 10.0, 3.0),
        ]))
        .G(vec![le(X(0), 5.0), lin(&[(X(0), -1.0), (Y(0), 1.0)], 0.0), neg(X(0))])
        .f(pow_lin(1.0, &[(X(0), 1.0), (Y(0), 2.0)], -15.0, 4.0))
        .g(vec![lin(&[(X(0), 1.0), (Y(0), 1.0)], -20.0), le(Y(0), 20.0), neg(Y(0))])
        .xb(0.0, 5.0)
        .yb(0.0, 20.0)
        .sol(Best, &[5.0], &[5.0])
        .build()
}

fn bard_like_lower_constraints() -> Vec<crate::jet::Component> {
    vec![
        lin(&[(X(0), -3.0), (Y(0), 1.0)], 3.0),
        lin(&[(X(0), 1.0), (Y(0), -0.5)], -4.0),
        lin(&[(X(0), 1.0), (Y(0), 1.0)], -7.0),
        neg(Y(0)),
    ]
}

fn colson_2002_bipa2(o: &Params) -> Built {
    P::new("Colson2002BIPA2", "Colson (2002)", 1, 1)
        .with(o)
        .F(Quad::new()
            .sq(1.0, &[(X(0), 1.0)], -5.0)
            .sq(1.0, &[(Y(0), 2.0)], 1.0)
            .build())
        .G(vec![neg(X(0))])
        .f(sum(vec![
            Quad::new().sq(1.0, &[(Y(0), 1.0)], -1.0).bil(X(0), Y(0), -1.5).build(),
            pow_lin(1.0, &[(X(0), 1.0)], 0.0, 3.0),
        ]))
        .g(bard_like_lower_constraints())
        .xb(0.0, 10.0)
        .yb(0.0, 7.0)
        .sol(Best, &[1.0], &[0.0])
        .build()
}

fn colson_2002_bipa3(o: &Params) -> Built {
    P::new("Colson2002BIPA3", "Colson (2002)", 1, 1)
        .with(o)
        .F(sum(vec![
            pow_lin(1.0, &[(X(0), 1.0)], -5.0, 4.0),
            pow_lin(1.0, &[(Y(0), 2.0)], 1.0, 4.0),
        ]))
        .G(vec![lin(&[(X(0), 1.0), (Y(0), 1.0)], -4.0), neg(X(0))])
        .f(sum(vec![
            exp_lin(1.0, &[(X(0), -1.0), (Y(0), 1.0)], 0.0),
            Quad::new()
                .sq(1.0, &[(X(0), 1.0), (Y(0), 1.0)], 0.0)
                .lin(X(0), 2.0)
                .lin(Y(0), 6.0)
                .build(),
        ]))
        .g(vec![lin(&[(X(0), -1.0), (Y(0), 1.0)], -2.0), neg(Y(0))])
        .xb(0.0, 4.0)
        .yb(0.0, 6.0)
        .sol(Best, &[4.0], &[0.0])
        .build()
}

fn colson_2002_bipa4(o: &Params) -> Built {
    P::new("Colson2002BIPA4", "Colson (2002)", 1, 1)
        .with(o)
        .F(Quad::new().bil(X(0), X(0), 1.0).sq(1.0, &[(Y(0), 1.0)], -10.0).build())
        .G(vec![lin(&[(X(0), 1.0), (Y(0), 2.0)], -6.0), neg(X(0))])
        .f(sum(vec![
            pow_lin(1.0, &[(X(0), 1.0)], 0.0, 3.0),
            pow_lin(2.0, &[(Y(0), 1.0)], 0.0, 3.0),
            Quad::new().lin(X(0), 1.0).lin(Y(0), -2.0).bil(X(0), X(0), -1.0).build(),
        ]))
        .g(vec![lin(&[(X(0), -1.0), (Y(0), 2.0)], -3.0), neg(Y(0))])
        .xb(0.0, 6.0)
        .yb(0.0, 4.5)
        .sol(Best, &[0.0], &[0.6039])
        .build()
}

fn colson_2002_bipa5(o: &Params) -> Built {
    let mut lower = vec![
        sum(vec![
            Quad::new().lin(X(0), 6.0).bil(Y(0), Y(0), 1.0).cst(-15.0).build(),
            exp_lin(1.0, &[(Y(1), 1.0)], 0.0),
        ]),
        sum(vec![
            lin(&[(X(0), 5.0), (Y(1), -1.0)], -25.0),
            pow_lin(1.0, &[(Y(0), 1.0)], 0.0, 4.0),
        ]),
        le(Y(0), 4.0),
        le(Y(1), 2.0),
    ];
    lower.extend(neg_y(2));
    P::new("Colson2002BIPA5", "Colson (2002)", 1, 2)
        .with(o)
        .F(sum(vec![
            pow_lin(1.0, &[(X(0), 1.0), (Y(1), -1.0)], 0.0, 4.0),
            Quad::new()
                .sq(1.0, &[(Y(0), 1.0)], -1.0)
                .sq(1.0, &[(Y(0), 1.0), (Y(1), -1.0)], 0.0)
                .build(),
        ]))
        .G(vec![neg(X(0))])
        .f(sum(vec![
            exp_lin(1.0, &[(Y(0), 1.0)], 0.0),
            Quad::new()
                .lin(X(0), 2.0)
                .bil(Y(0), Y(0), 1.0)
                .lin(Y(0), 4.0)
                .bil(Y(1), Y(1), 2.0)
                .lin(Y(1), -6.0)
                .build(),
        ]))
        .g(lower)
        .xb(0.0, 2.5)
        .ybi(0, 0.0, 4.0)
        .ybi(1, 0.0, 2.0)
        .sol(Best, &[1.94], &[0.0, 1.21])
        .build()
}
