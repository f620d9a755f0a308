//! Ribbon axioms on both sides of the functor, reported as `Err(description)`.

use tlsl2_core::Field;
use tlsl2_diagrams::tl_category::TlCategory;
use tlsl2_diagrams::turaev::ObjectSeq;
use tlsl2_diagrams::{enumerate_simple, TlMorphism};
use tlsl2_functor::Functor;
use tlsl2_uqsl2::RepMap;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

/// Every color sequence with entries at most `max_color` and total size at most `max`.
pub fn objects(max: usize, max_color: u32) -> Vec<ObjectSeq> {
    let mut out = vec![ObjectSeq::unit()];
    let mut frontier = vec![Vec::<u32>::new()];
    while let Some(s) = frontier.pop() {
        let size: u32 = s.iter().sum();
        for c in 1..=max_color {
            if (size + c) as usize <= max {
                let mut t = s.clone();
                t.push(c);
                out.push(ObjectSeq::new(t.clone()));
                frontier.push(t);
            }
        }
    }
    out
}

/// Snakes for objects of size at most `max`; twist compatibility, naturality
/// and hexagons whenever the objects involved together have size at most `hex`.
pub fn diagram_axioms<F: Field>(
    c: &TlCategory<F>,
    max: usize,
    hex: usize,
    max_color: u32,
) -> Result<(), String> {
    let f = c.field().clone();
    let objs = objects(max, max_color);
    for s in &objs {
        let rs = c.ribbon_data(s, s).map_err(err)?;
        let fs = c.jw_tensor(s.colors()).map_err(err)?;
        let fsd = c.jw_tensor(s.dual().colors()).map_err(err)?;
        let left = c
            .compose_all(&[&fs.tensor(&rs.ev), &rs.coev.tensor(&fs)])
            .map_err(err)?;
        ensure!(left == fs, "snake (b_s ⊗ id)(id ⊗ d_s) at {s}");
        let right = c
            .compose_all(&[&rs.ev.tensor(&fsd), &fsd.tensor(&rs.coev)])
            .map_err(err)?;
        ensure!(right == fsd, "snake (d_s ⊗ id)(id ⊗ b_s) at {s}");
        let endos: Vec<TlMorphism<F::Elem>> = enumerate_simple(s.size(), s.size())
            .into_iter()
            .map(|d| {
                c.hat(&TlMorphism::from_diagram(&f, d), s, s)
                    .map(|h| h.value)
            })
            .collect::<Result<_, _>>()
            .map_err(err)?;
        for t in &objs {
            if s.size() + t.size() > hex {
                continue;
            }
            let (ft, st) = (c.jw_tensor(t.colors()).map_err(err)?, s.concat(t));
            let cst = c.ribbon_data(s, t).map_err(err)?.braiding;
            let cts = c.ribbon_data(t, s).map_err(err)?.braiding;
            let theta_st = c.ribbon_data(&st, &st).map_err(err)?.twist;
            let rt = c.ribbon_data(t, t).map_err(err)?;
            let rhs = c
                .compose_all(&[&cts, &cst, &rs.twist.tensor(&rt.twist)])
                .map_err(err)?;
            ensure!(theta_st == rhs, "twist compatibility at {s} ⊗ {t}");
            for g in &endos {
                let l = c.compose(&cst, &g.tensor(&ft)).map_err(err)?;
                let r = c.compose(&ft.tensor(g), &cst).map_err(err)?;
                ensure!(l == r, "naturality of c_{{{s},{t}}}");
            }
            for u in &objs {
                if s.size() + t.size() + u.size() > hex {
                    continue;
                }
                let fu = c.jw_tensor(u.colors()).map_err(err)?;
                let c_s_tu = c.ribbon_data(s, &t.concat(u)).map_err(err)?.braiding;
                let csu = c.ribbon_data(s, u).map_err(err)?.braiding;
                let rhs = c.compose(&ft.tensor(&csu), &cst.tensor(&fu)).map_err(err)?;
                ensure!(c_s_tu == rhs, "hexagon c_{{s,t⊗u}} at {s}, {t}, {u}");
                let c_st_u = c.ribbon_data(&st, u).map_err(err)?.braiding;
                let ctu = c.ribbon_data(t, u).map_err(err)?.braiding;
                let rhs = c.compose(&csu.tensor(&ft), &fs.tensor(&ctu)).map_err(err)?;
                ensure!(c_st_u == rhs, "hexagon c_{{s⊗t,u}} at {s}, {t}, {u}");
            }
        }
    }
    Ok(())
}

/// `b_n` and `d_n` on `V^{⊗n}` nested from the elementary `b` and `d`.
fn nested_duality<F: Field>(
    func: &Functor<F>,
    n: usize,
) -> Result<(RepMap<F::Elem>, RepMap<F::Elem>), String> {
    let f = func.field();
    let e = func.uq().elementary();
    let (mut b, mut d) = (RepMap::identity(f, 0), RepMap::identity(f, 0));
    for k in 0..n {
        let id = RepMap::identity(f, k);
        b = id
            .tensor(f, &e.b)
            .tensor(f, &id)
            .compose(f, &b)
            .map_err(err)?;
        d = d
            .compose(f, &id.tensor(f, &e.d).tensor(f, &id))
            .map_err(err)?;
    }
    Ok((b, d))
}

/// The same axioms for `V^{⊗n}` with the braiding and twist built from `c_{V,V}`
/// and the elementary duality maps. Naturality is tested against the full
/// commutant of the `U_q(sl_2)` action, which contains every colored projector.
pub fn rep_axioms<F: Field>(func: &Functor<F>, max: usize, hex: usize) -> Result<(), String> {
    let f = func.field();
    for n in 0..=max {
        let id = RepMap::identity(f, n);
        let (b, d) = nested_duality(func, n)?;
        let snake = id
            .tensor(f, &d)
            .compose(f, &b.tensor(f, &id))
            .map_err(err)?;
        ensure!(snake == id, "snake (id ⊗ d_n)(b_n ⊗ id) for n = {n}");
        let snake = d
            .tensor(f, &id)
            .compose(f, &id.tensor(f, &b))
            .map_err(err)?;
        ensure!(snake == id, "snake (d_n ⊗ id)(id ⊗ b_n) for n = {n}");
        let endos = func.uq().rep_hom_basis(n, n).map_err(err)?;
        for m in 0..=max {
            let cnm = func.rep_braiding(n, m).map_err(err)?;
            let cmn = func.rep_braiding(m, n).map_err(err)?;
            let tw = func
                .rep_twist(n)
                .map_err(err)?
                .tensor(f, &*func.rep_twist(m).map_err(err)?);
            let rhs = cmn
                .compose(f, &cnm)
                .and_then(|x| x.compose(f, &tw))
                .map_err(err)?;
            ensure!(
                *func.rep_twist(n + m).map_err(err)? == rhs,
                "twist compatibility for ({n}, {m})"
            );
            let idm = RepMap::identity(f, m);
            for g in endos.iter() {
                let l = cnm.compose(f, &g.tensor(f, &idm)).map_err(err)?;
                let r = idm.tensor(f, g).compose(f, &cnm).map_err(err)?;
                ensure!(l == r, "naturality of c_{{{n},{m}}}");
            }
            for k in 0..=hex.saturating_sub(n + m) {
                let lhs = func.rep_braiding(n, m + k).map_err(err)?;
                let rhs = idm
                    .tensor(f, &*func.rep_braiding(n, k).map_err(err)?)
                    .compose(f, &cnm.tensor(f, &RepMap::identity(f, k)))
                    .map_err(err)?;
                ensure!(*lhs == rhs, "hexagon c_{{n,m⊗k}} for ({n}, {m}, {k})");
                let lhs = func.rep_braiding(n + m, k).map_err(err)?;
                let rhs = func
                    .rep_braiding(n, k)
                    .map_err(err)?
                    .tensor(f, &idm)
                    .compose(f, &id.tensor(f, &*func.rep_braiding(m, k).map_err(err)?))
                    .map_err(err)?;
                ensure!(*lhs == rhs, "hexagon c_{{n⊗m,k}} for ({n}, {m}, {k})");
            }
        }
    }
    Ok(())
}
