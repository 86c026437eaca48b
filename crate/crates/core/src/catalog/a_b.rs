use super::{Built, P, Approx, Best, Global, Local};
use crate::jet::{affine, lin, neg, neg_x, neg_y, quadratic_form, ge, le, Quad, X, Y};
use crate::model::Params;

pub(super) const ALL: &[fn(&Params) -> Built] = &[
    aiyoshi_shimizu_1984_ex2,
    allende_still_2013,
    an_etal_2009,
    bard_1988_ex1,
    bard_1988_ex2,
    bard_1988_ex3,
    bard_1991_ex1,
    bard_book_1998,
];

fn aiyoshi_shimizu_1984_ex2(o: &Params) -> Built {
    P::new("AiyoshiShimizu1984Ex2", "Aiyoshi and Shimizu (1984)", 2, 2)
        .with(o)
        .F(lin(&[(X(0), 2.0), (X(1), 2.0), (Y(0), -3.0), (Y(1), -3.0)], -60.0))
        .G(vec![
            lin(&[(X(0), 1.0), (X(1), 1.0), (Y(0), 1.0), (Y(1), -2.0)], -40.0),
            le(X(0), 50.0),
            le(X(1), 50.0),
            neg(X(0)),
            neg(X(1)),
        ])
        .f(Quad::new()
            .sq(1.0, &[(Y(0), 1.0), (X(0), -1.0)], 20.0)
            .sq(1.0, &[(Y(1), 1.0), (X(1), -1.0)], 20.0)
            .build())
        .g(vec![
            lin(&[(Y(0), 2.0), (X(0), -1.0)], 10.0),
            lin(&[(Y(1), 2.0), (X(1), -1.0)], 10.0),
            ge(Y(0), -10.0),
            ge(Y(1), -10.0),
            le(Y(0), 20.0),
            le(Y(1), 20.0),
        ])
        .xb(0.0, 50.0)
        .yb(-10.0, 20.0)
        .sol(Global, &[25.0, 30.0], &[5.0, 10.0])
        .sol(Local, &[0.0, 0.0], &[-10.0, -10.0])
        .build()
}

fn allende_still_2013(o: &Params) -> Built {
    P::new("AllendeStill2013", "Allende and Still (2013)", 2, 2)
        .with(o)
        .F(Quad::new()
            .bil(X(0), X(0), -1.0)
            .lin(X(0), -2.0)
            .bil(X(1), X(1), 1.0)
            .lin(X(1), -2.0)
            .bil(Y(0), Y(0), 1.0)
            .bil(Y(1), Y(1), 1.0)
            .build())
        .G(vec![neg(X(0)), neg(X(1)), neg(Y(0)), neg(Y(1)), le(X(0), 2.0)])
        .f(Quad::new()
            .bil(Y(0), Y(0), 1.0)
            .bil(X(0), Y(0), -2.0)
            .bil(Y(1), Y(1), 1.0)
            .bil(X(1), Y(1), -2.0)
            .build())
        .g(vec![
            Quad::new().sq(1.0, &[(Y(0), 1.0)], -1.0).cst(-0.25).build(),
            Quad::new().sq(1.0, &[(Y(1), 1.0)], -1.0).cst(-0.25).build(),
        ])
        .xbi(0, 0.0, 2.0)
        .xbi(1, 0.0, 10.0)
        .yb(0.5, 1.5)
        .sol(Best, &[0.5, 0.5], &[0.5, 0.5])
        .build()
}

fn an_etal_2009(o: &Params) -> Built {
    #[rustfmt::skip]
    let h = vec![
        -3.8, 4.4, 1.2, -2.2,
        4.4, -2.2, 0.6, 1.8,
        1.2, 0.6, 0.0, 0.4,
        -2.2, 1.8, 0.4, 0.0,
    ];
    let c = vec![935.74474, 87.53654, 121.96196, 299.24825];
    let a = [[0.0, 3.88889], [-2.0, 8.77778]];
    let b = [[4.88889, 7.44444], [-5.11111, 0.88889]];
    let d = [-61.57778, -0.8];
    let p = [[-17.85, 6.575], [30.325, 30.325]];
    let q = [[21.10204, 11.81633], [-5.11111, -14.44898]];
    let qv = [-18.21053, 13.05263];
    let dm = [[5.0, 7.44444], [-8.33333, 3.0], [-8.66667, -8.55556], [6.44444, -5.11111]];
    let em = [[3.88889, 1.77778], [6.88889, 6.11111], [-5.33333, -7.0], [1.44444, 4.44444]];
    let bv = [-39.62222, -60.0, 72.37778, -17.28889];

    // yᵀPx + ½yᵀQy + qᵀy as a joint quadratic form; only the symmetric part of Q matters.
    let mut hf = vec![0.0; 16];
    for i in 0..2 {
        for k in 0..2 {
            hf[(2 + i) * 4 + k] = p[i][k];
            hf[k * 4 + 2 + i] = p[i][k];
            hf[(2 + i) * 4 + 2 + k] = 0.5 * (q[i][k] + q[k][i]);
        }
    }
    let mut upper = neg_x(2);
    upper.extend(neg_y(2));
    upper.extend((0..2).map(|r| affine(&a[r], &b[r], d[r])));
    P::new("AnEtal2009", "An et al. (2009)", 2, 2)
        .with(o)
        .F(quadratic_form(2, 2, h, c, 0.0))
        .G(upper)
        .f(quadratic_form(2, 2, hf, vec![0.0, 0.0, qv[0], qv[1]], 0.0))
        .g((0..4).map(|r| affine(&dm[r], &em[r], bv[r])).collect())
        .xb(0.0, 10.0)
        .yb(0.0, 10.0)
        .sol(Approx, &[0.200001, 1.999997], &[3.999998, 4.600005])
        .build()
}

fn bard_1988_ex1(o: &Params) -> Built {
    P::new("Bard1988Ex1", "Bard (1988)", 1, 1)
        .with(o)
        .F(Quad::new()
            .sq(1.0, &[(X(0), 1.0)], -5.0)
            .sq(1.0, &[(Y(0), 2.0)], 1.0)
            .build())
        .G(vec![neg(X(0))])
        .f(Quad::new().sq(1.0, &[(Y(0), 1.0)], -1.0).bil(X(0), Y(0), -1.5).build())
        .g(vec![
            lin(&[(X(0), -3.0), (Y(0), 1.0)], 3.0),
            lin(&[(X(0), 1.0), (Y(0), -0.5)], -4.0),
            lin(&[(X(0), 1.0), (Y(0), 1.0)], -7.0),
            neg(Y(0)),
        ])
        .xb(0.0, 10.0)
        .yb(0.0, 7.0)
        .sol(Global, &[1.0], &[0.0])
        .sol(Local, &[5.0], &[2.0])
        .build()
}

fn bard_1988_ex2(o: &Params) -> Built {
    let mut upper = vec![
        lin(&[(X(0), 1.0), (X(1), 1.0), (X(2), 1.0), (X(3), 1.0)], -40.0),
        le(X(0), 10.0),
        le(X(1), 5.0),
        le(X(2), 15.0),
        le(X(3), 20.0),
    ];
    upper.extend(neg_x(4));
    let mut lower = vec![
        lin(&[(Y(0), 0.4), (Y(1), 0.7), (X(0), -1.0)], 0.0),
        lin(&[(Y(0), 0.6), (Y(1), 0.3), (X(1), -1.0)], 0.0),
        lin(&[(Y(2), 0.4), (Y(3), 0.7), (X(2), -1.0)], 0.0),
        lin(&[(Y(2), 0.6), (Y(3), 0.3), (X(3), -1.0)], 0.0),
        le(Y(0), 20.0),
        le(Y(1), 20.0),
        le(Y(2), 40.0),
        le(Y(3), 40.0),
    ];
    lower.extend(neg_y(4));
    P::new("Bard1988Ex2", "Bard (1988)", 4, 4)
        .with(o)
        // (200 − y1 − y3)(y1 + y3) + (160 − y2 − y4)(y2 + y4)
        .F(Quad::new()
            .sq(-1.0, &[(Y(0), 1.0), (Y(2), 1.0)], 0.0)
            .sq(-1.0, &[(Y(1), 1.0), (Y(3), 1.0)], 0.0)
            .lin(Y(0), 200.0)
            .lin(Y(2), 200.0)
            .lin(Y(1), 160.0)
            .lin(Y(3), 160.0)
            .build())
        .G(upper)
        .f(Quad::new()
            .sq(1.0, &[(Y(0), 1.0)], -4.0)
            .sq(1.0, &[(Y(1), 1.0)], -13.0)
            .sq(1.0, &[(Y(2), 1.0)], -35.0)
            .sq(1.0, &[(Y(3), 1.0)], -2.0)
            .build())
        .g(lower)
        .xbi(0, 0.0, 10.0)
        .xbi(1, 0.0, 5.0)
        .xbi(2, 0.0, 15.0)
        .xbi(3, 0.0, 20.0)
        .ybi(0, 0.0, 20.0)
        .ybi(1, 0.0, 20.0)
        .ybi(2, 0.0, 40.0)
        .ybi(3, 0.0, 40.0)
        .values(Some(-6600.0), Some(54.0))
        .values(Some(-6600.0), Some(57.48))
        .note("two claimed value pairs: literature (-6600, 57.48) and corrected (-6600, 54); the corrected pair is authoritative")
        .note("F as written is nonnegative on the feasible box, so F* = -6600 corresponds to the maximization form of the original problem")
        .build()
}

fn bard_1988_ex3(o: &Params) -> Built {
    P::new("Bard1988Ex3", "Bard (1988)", 2, 2)
        .with(o)
        .F(Quad::new()
            .bil(X(0), X(0), -1.0)
            .lin(X(1), -3.0)
            .lin(Y(0), -4.0)
            .bil(Y(1), Y(1), 1.0)
            .build())
        .G(vec![
            Quad::new().bil(X(0), X(0), 1.0).lin(X(1), 2.0).cst(-4.0).build(),
            neg(X(0)),
            neg(X(1)),
        ])
        .f(Quad::new().bil(X(0), X(0), 2.0).bil(Y(0), Y(0), 1.0).lin(Y(1), -5.0).build())
        .g(vec![
            Quad::new()
                .bil(X(0), X(0), -1.0)
                .lin(X(0), 2.0)
                .bil(X(1), X(1), -1.0)
                .lin(Y(0), 2.0)
                .lin(Y(1), -1.0)
                .cst(-3.0)
                .build(),
            lin(&[(X(1), -1.0), (Y(0), -3.0), (Y(1), 4.0)], 4.0),
            neg(Y(0)),
            neg(Y(1)),
        ])
        .xb(0.0, 2.0)
        .yb(0.0, 10.0)
        .values(Some(-12.68), Some(-1.02))
        .build()
}

fn bard_1991_ex1(o: &Params) -> Built {
    P::new("Bard1991Ex1", "Bard (1991)", 1, 2)
        .with(o)
        .F(lin(&[(X(0), 1.0), (Y(1), 1.0)], 0.0))
        .G(vec![ge(X(0), 2.0), le(X(0), 4.0)])
        .f(Quad::new().lin(Y(0), 2.0).bil(X(0), Y(1), 1.0).build())
        .g(vec![lin(&[(X(0), 1.0), (Y(0), -1.0), (Y(1), -1.0)], 4.0), neg(Y(0)), neg(Y(1))])
        .xb(2.0, 4.0)
        .yb(0.0, 10.0)
        .sol(Global, &[2.0], &[6.0, 0.0])
        .build()
}

fn bard_book_1998(o: &Params) -> Built {
    P::new("BardBook1998", "Bard (1998)", 2, 2)
        .with(o)
        .F(Quad::new()
            .sq(1.0, &[(Y(0), 1.0), (X(0), -1.0)], 20.0)
            .sq(1.0, &[(Y(1), 1.0), (X(1), -1.0)], 20.0)
            .build())
        .G(vec![le(X(0), 50.0), le(X(1), 50.0), neg(X(0)), neg(X(1))])
        .f(lin(&[(X(0), 2.0), (X(1), 2.0), (Y(0), -3.0), (Y(1), -3.0)], -60.0))
        .g(vec![
            lin(&[(X(0), 1.0), (X(1), 1.0), (Y(0), 1.0), (Y(1), -2.0)], -40.0),
            lin(&[(Y(0), 2.0), (X(0), -1.0)], 10.0),
            lin(&[(Y(1), 2.0), (X(1), -1.0)], 10.0),
            le(Y(0), 20.0),
            le(Y(1), 20.0),
            ge(Y(0), -10.0),
            ge(Y(1), -10.0),
        ])
        .xb(0.0, 50.0)
        .yb(-10.0, 20.0)
        .note("solution unknown")
        .build()
}
