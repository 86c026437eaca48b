use super::{mono, sum, Built, P, Best, Global, Local};
use crate::jet::{ge, le, lin, neg, neg_x, neg_y, Quad, X, Y};
use crate::model::{with_equalities, Params};

pub(super) const ALL: &[fn(&Params) -> Built] = &[
    dempe_1992a,
    dempe_1992b,
    dempe_dutta_2012_ex24,
    dempe_dutta_2012_ex31,
    dempe_etal_2012,
    dempe_franke_2011_ex41,
    dempe_franke_2011_ex42,
    dempe_franke_2014_ex38,
    dempe_lohse_2011_ex31a,
    dempe_lohse_2011_ex31b,
    de_silva_1978,
    edmunds_bard_1991,
    falk_liu_1995,
    floudas_zlobec_1998,
];

fn dempe_1992a(o: &Params) -> Built {
    P::new("Dempe1992a", "Dempe (1992)", 2, 2)
        .with(o)
        .F(lin(&[(Y(1), 1.0)], 0.0))
        .G(vec![Quad::new().bil(X(0), X(0), 1.0).sq(1.0, &[(X(1), 1.0)], 1.0).cst(-1.0).build()])
        .f(Quad::new().sq(0.5, &[(Y(0), 1.0)], -1.0).bil(Y(1), Y(1), 0.5).build())
        .g(vec![
            Quad::new().lin(Y(0), 1.0).bil(X(0), Y(1), 1.0).lin(X(1), 1.0).build(),
            lin(&[(Y(0), 1.0)], 0.0),
        ])
        .xbi(0, -1.0, 1.0)
        .xbi(1, -2.0, 0.0)
        .sol(Best, &[0.0, 0.0], &[0.0, -0.5])
        .build()
}

fn dempe_1992b(o: &Params) -> Built {
    P::new("Dempe1992b", "Dempe (1992)", 1, 1)
        .with(o)
        .F(Quad::new()
            .sq(1.0, &[(X(0), 1.0)], -3.5)
            .sq(1.0, &[(Y(0), 1.0)], 4.0)
            .build())
        .f(Quad::new().sq(1.0, &[(Y(0), 1.0)], -3.0).build())
        .g(vec![Quad::new().bil(Y(0), Y(0), 1.0).lin(X(0), -1.0).build()])
        .xb(0.0, 10.0)
        .yb(-3.2, 3.2)
        .values(Some(31.25), Some(4.0))
        .build()
}

fn dempe_dutta_2012_ex24(o: &Params) -> Built {
    P::new("DempeDutta2012Ex24", "Dempe and Dutta (2012)", 1, 1)
        .with(o)
        .F(Quad::new().sq(1.0, &[(X(0), 1.0)], -1.0).bil(Y(0), Y(0), 1.0).build())
        .f(mono(1.0, &[(X(0), 2), (Y(0), 1)]))
        .g(vec![Quad::new().bil(Y(0), Y(0), 1.0).build()])
        .sol(Global, &[1.0], &[0.0])
        .note("the lower-level feasible set is {0} and its constraint gradient vanishes there, so KKT multipliers need not exist")
        .build()
}

fn dempe_dutta_2012_ex31(o: &Params) -> Built {
    let h = vec![Quad::new().bil(Y(0), Y(1), 1.0).build()];
    P::new("DempeDutta2012Ex31", "Dempe and Dutta (2012)", 2, 2)
        .with(o)
        .F(lin(&[(Y(1), -1.0)], 0.0))
        .G(with_equalities(neg_x(2), &h))
        .f(Quad::new().bil(Y(0), Y(0), 1.0).sq(1.0, &[(Y(1), 1.0)], 1.0).build())
        .g(vec![
            Quad::new()
                .sq(1.0, &[(Y(0), 1.0), (X(0), -1.0)], 0.0)
                .sq(1.0, &[(Y(1), 1.0), (X(0), -1.0)], -1.0)
                .cst(-1.0)
                .build(),
            Quad::new()
                .sq(1.0, &[(Y(0), 1.0), (X(1), 1.0)], 0.0)
                .sq(1.0, &[(Y(1), 1.0), (X(1), -1.0)], -1.0)
                .cst(-1.0)
                .build(),
        ])
        .xb(0.0, 10.0)
        .equalities(1, 0)
        .sol(Best, &[0.71, 0.71], &[0.0, 1.0])
        .sol_tol(5e-3)
        .sol_note("stated to two decimals; 0.71 is most likely 1/sqrt(2), at which the lower constraints are exactly active")
        .build()
}

fn dempe_etal_2012(o: &Params) -> Built {
    P::new("DempeEtal2012", "Dempe et al. (2012)", 1, 1)
        .with(o)
        .F(lin(&[(X(0), 1.0)], 0.0))
        .G(vec![ge(X(0), -1.0), le(X(0), 1.0)])
        .f(Quad::new().bil(X(0), Y(0), 1.0).build())
        .g(vec![neg(Y(0)), le(Y(0), 1.0)])
        .xb(-1.0, 1.0)
        .yb(0.0, 1.0)
        .sol(Best, &[-1.0], &[1.0])
        .build()
}

fn franke_upper(x2_hi: f64, equality: bool) -> Vec<crate::jet::Component> {
    let rows = vec![ge(X(0), -1.0), le(X(0), 1.0)];
    if equality {
        // x2 = −1 written as H = −1 − x2
        with_equalities(rows, &[lin(&[(X(1), -1.0)], -1.0)])
    } else {
        let mut rows = rows;
        rows.extend([ge(X(1), -1.0), le(X(1), x2_hi)]);
        rows
    }
}

fn dempe_franke_2011_ex41(o: &Params) -> Built {
    P::new("DempeFranke2011Ex41", "Dempe and Franke (2011)", 2, 2)
        .with(o)
        .F(Quad::new().lin(X(0), 1.0).bil(Y(0), Y(0), 1.0).bil(Y(1), Y(1), 1.0).build())
        .G(franke_upper(-1.0, true))
        .f(Quad::new().bil(X(0), Y(0), 1.0).bil(X(1), Y(1), 1.0).build())
        .g(vec![
            lin(&[(Y(0), -2.0), (Y(1), 1.0)], 0.0),
            le(Y(0), 2.0),
            neg(Y(1)),
            le(Y(1), 2.0),
        ])
        .xbi(0, -1.0, 1.0)
        .xbi(1, -1.0, -1.0)
        .yb(0.0, 2.0)
        .equalities(1, 0)
        .sol(Best, &[0.0, -1.0], &[1.0, 2.0])
        .build()
}

fn dempe_franke_2011_ex42(o: &Params) -> Built {
    P::new("DempeFranke2011Ex42", "Dempe and Franke (2011)", 2, 2)
        .with(o)
        .F(Quad::new()
            .lin(X(0), 1.0)
            .sq(1.0, &[(Y(0), 1.0)], -1.0)
            .bil(Y(1), Y(1), 1.0)
            .build())
        .G(franke_upper(-1.0, true))
        .f(Quad::new().bil(X(0), Y(0), 1.0).bil(X(1), Y(1), 1.0).build())
        .g(vec![
            lin(&[(Y(0), -1.0), (Y(1), 1.0)], -1.0),
            lin(&[(Y(0), 1.0), (Y(1), 1.0)], -3.5),
            le(Y(1), 2.0),
        ])
        .xbi(0, -1.0, 1.0)
        .xbi(1, -1.0, -1.0)
        .ybi(0, -10.0, 3.5)
        .ybi(1, -10.0, 2.0)
        .equalities(1, 0)
        .sol(Best, &[1.0, -1.0], &[0.0, 1.0])
        .build()
}

fn dempe_franke_2014_ex38(o: &Params) -> Built {
    P::new("DempeFranke2014Ex38", "Dempe and Franke (2014)", 2, 2)
        .with(o)
        .F(lin(&[(X(0), 2.0), (X(1), 1.0), (Y(0), 2.0), (Y(1), -1.0)], 0.0))
        .G(franke_upper(-0.75, false))
        .f(Quad::new().bil(X(0), Y(0), 1.0).bil(X(1), Y(1), 1.0).build())
        .g(vec![
            lin(&[(Y(0), -2.0), (Y(1), 1.0)], 0.0),
            le(Y(0), 2.0),
            neg(Y(1)),
            le(Y(1), 2.0),
        ])
        .xbi(0, -1.0, 1.0)
        .xbi(1, -1.0, -0.75)
        .yb(0.0, 2.0)
        .sol(Best, &[-1.0, -1.0], &[2.0, 2.0])
        .build()
}

fn dempe_lohse_2011_ex31a(o: &Params) -> Built {
    let mut lower = vec![
        lin(&[(Y(0), 1.0), (Y(1), 1.0)], -2.0),
        lin(&[(Y(0), -1.0), (Y(1), 1.0)], 0.0),
    ];
    lower.extend(neg_y(2));
    P::new("DempeLohse2011Ex31a", "Dempe and Lohse (2011)", 2, 2)
        .with(o)
        .F(Quad::new()
            .sq(1.0, &[(X(0), 1.0)], -0.5)
            .sq(1.0, &[(X(1), 1.0)], -0.5)
            .lin(Y(0), -3.0)
            .lin(Y(1), -3.0)
            .build())
        .f(Quad::new().bil(X(0), Y(0), 1.0).bil(X(1), Y(1), 1.0).build())
        .g(lower)
        .yb(0.0, 2.0)
        .sol(Global, &[0.5, 0.5], &[1.0, 1.0])
        .build()
}

fn dempe_lohse_2011_ex31b(o: &Params) -> Built {
    let mut lower = vec![
        lin(&[(Y(0), 1.0), (Y(1), 1.0), (Y(2), 1.0)], -2.0),
        lin(&[(Y(0), -1.0), (Y(1), 1.0)], 0.0),
    ];
    lower.extend(neg_y(3));
    P::new("DempeLohse2011Ex31b", "Dempe and Lohse (2011)", 3, 3)
        .with(o)
        .F(Quad::new()
            .sq(1.0, &[(X(0), 1.0)], -0.5)
            .sq(1.0, &[(X(1), 1.0)], -0.5)
            .bil(X(2), X(2), 1.0)
            .lin(Y(0), -3.0)
            .lin(Y(1), -3.0)
            .lin(X(2), -6.0)
            .build())
        .f(Quad::new()
            .bil(X(0), Y(0), 1.0)
            .bil(X(1), Y(1), 1.0)
            .bil(X(2), Y(2), 1.0)
            .build())
        .g(lower)
        .yb(0.0, 2.0)
        .sol(Local, &[0.5, 0.5, 0.0], &[1.0, 1.0, 0.0])
        .sol(Best, &[0.5, 0.5, 0.0], &[0.0, 0.0, 2.0])
        .build()
}

fn bounds_half_to_three_halves() -> Vec<crate::jet::Component> {
    vec![ge(Y(0), 0.5), ge(Y(1), 0.5), le(Y(0), 1.5), le(Y(1), 1.5)]
}

fn de_silva_1978(o: &Params) -> Built {
    P::new("DeSilva1978", "De Silva (1978)", 2, 2)
        .with(o)
        .F(Quad::new()
            .bil(X(0), X(0), 1.0)
            .lin(X(0), -2.0)
            .bil(X(1), X(1), 1.0)
            .lin(X(1), -2.0)
            .bil(Y(0), Y(0), 1.0)
            .bil(Y(1), Y(1), 1.0)
            .build())
        .f(Quad::new()
            .sq(1.0, &[(Y(0), 1.0), (X(0), -1.0)], 0.0)
            .sq(1.0, &[(Y(1), 1.0), (X(1), -1.0)], 0.0)
            .build())
        .g(bounds_half_to_three_halves())
        .yb(0.5, 1.5)
        .values(Some(-1.0), Some(0.0))
        .build()
}

fn edmunds_bard_1991(o: &Params) -> Built {
    let mut upper = neg_x(2);
    upper.extend([le(X(0), 50.0), le(X(1), 50.0)]);
    P::new("EdmundsBard1991", "Edmunds and Bard (1991)", 2, 2)
        .with(o)
        .F(lin(&[(X(0), 2.0), (X(1), 2.0), (Y(0), -3.0), (Y(1), -3.0)], -60.0))
        .G(upper)
        .f(Quad::new()
            .sq(1.0, &[(Y(0), 1.0), (X(0), -1.0)], 20.0)
            .sq(1.0, &[(Y(1), 1.0), (X(1), -1.0)], 20.0)
            .build())
        .g(vec![
            lin(&[(X(0), 1.0), (X(1), 1.0), (Y(0), 1.0), (Y(1), -2.0)], -40.0),
            lin(&[(Y(0), 2.0), (X(0), -1.0)], 10.0),
            lin(&[(Y(1), 2.0), (X(1), -1.0)], 10.0),
            ge(Y(0), -10.0),
            ge(Y(1), -10.0),
            le(Y(0), 20.0),
            le(Y(1), 20.0),
        ])
        .xb(0.0, 50.0)
        .yb(-10.0, 20.0)
        .sol(Best, &[0.0, 0.0], &[-10.0, -10.0])
        .build()
}

fn falk_liu_1995(o: &Params) -> Built {
    P::new("FalkLiu1995", "Falk and Liu (1995)", 2, 2)
        .with(o)
        .F(Quad::new()
            .bil(X(0), X(0), 1.0)
            .lin(X(0), -3.0)
            .bil(X(1), X(1), 1.0)
            .lin(X(1), -3.0)
            .bil(Y(0), Y(0), 1.0)
            .bil(Y(1), Y(1), 1.0)
            .build())
        .f(Quad::new()
            .sq(1.0, &[(Y(0), 1.0), (X(0), -1.0)], 0.0)
            .sq(1.0, &[(Y(1), 1.0), (X(1), -1.0)], 0.0)
            .build())
        .g(bounds_half_to_three_halves())
        .yb(0.5, 1.5)
        .sol(Best, &[0.7537, 0.7537], &[0.7463, 0.7463])
        .build()
}

fn floudas_zlobec_1998(o: &Params) -> Built {
    P::new("FloudasZlobec1998", "Floudas and Zlobec (1998)", 1, 2)
        .with(o)
        .F(sum(vec![mono(1.0, &[(X(0), 3), (Y(0), 1)]), lin(&[(Y(1), 1.0)], 0.0)]))
        .G(vec![le(X(0), 1.0), neg(X(0))])
        .f(lin(&[(Y(1), -1.0)], 0.0))
        .g(vec![
            ge(Y(0), -1.0),
            le(Y(0), 1.0),
            neg(Y(1)),
            le(Y(1), 100.0),
            Quad::new().bil(X(0), Y(0), 1.0).cst(-10.0).build(),
            Quad::new().bil(Y(0), Y(0), 1.0).bil(X(0), Y(1), 1.0).cst(-1.0).build(),
        ])
        .xb(0.0, 1.0)
        .ybi(0, -1.0, 1.0)
        .ybi(1, 0.0, 100.0)
        .sol(Global, &[1.0], &[0.0, 1.0])
        .build()
}
