//! Turning --mode, --alpha, --zeta, --eta and --independent-beta into
//! parameter values.

use kerov_core::exact::field::FieldElem;
use kerov_core::exact::poly::Var;
use kerov_core::exact::rational::Rational;
use kerov_core::jack::Mode;
use kerov_core::kerov::{alpha_beta, RPoly};

use crate::commands::Failure;
use crate::{ModeArg, Opts};

/// Images of `α` and `β`; `None` keeps both free.
#[derive(Clone, Debug)]
pub struct Specialization {
    pub label: String,
    pub images: Option<(FieldElem, FieldElem)>,
}

impl Specialization {
    pub fn is_free(&self) -> bool {
        self.images.is_none()
    }

    pub fn apply(&self, poly: &RPoly<FieldElem>) -> Result<RPoly<FieldElem>, Failure> {
        let Some((a, b)) = &self.images else {
            return Ok(poly.clone());
        };
        let map = |v: Var| match v {
            Var::Alpha => a.clone(),
            Var::Beta => b.clone(),
            v => FieldElem::var(v),
        };
        poly.try_map(|c| c.substitute(&map)).map_err(Failure::domain)
    }
}

fn pair(o: &Opts) -> Result<Option<(Rational, Rational)>, Failure> {
    match (&o.zeta, &o.eta) {
        (Some(z), Some(e)) => Ok(Some((z.clone(), e.clone()))),
        (None, None) => Ok(None),
        _ => Err(Failure::Usage("--zeta and --eta go together".into())),
    }
}

fn check_flags(o: &Opts) -> Result<(), Failure> {
    match o.mode {
        ModeArg::Alpha if o.zeta.is_some() || o.eta.is_some() => {
            Err(Failure::Usage("--zeta/--eta need --mode zeta-eta".into()))
        }
        ModeArg::ZetaEta if o.alpha.is_some() => Err(Failure::Usage("--alpha needs --mode alpha".into())),
        _ => Ok(()),
    }
}

/// The parameters for polynomials in `α`, `β`.
pub fn specialization(o: &Opts) -> Result<Specialization, Failure> {
    check_flags(o)?;
    let r = |x: &Rational| FieldElem::from_rational(x);
    Ok(match o.mode {
        ModeArg::Alpha => match &o.alpha {
            None => Specialization { label: "symbolic".into(), images: None },
            Some(a) if o.independent_beta => {
                Specialization { label: format!("alpha={a}"), images: Some((r(a), FieldElem::beta())) }
            }
            Some(a) => {
                let b = Rational::from_integer(1.into()) - a;
                Specialization { label: format!("alpha={a},beta={b}"), images: Some((r(a), r(&b))) }
            }
        },
        ModeArg::ZetaEta => match pair(o)? {
            Some((z, e)) => {
                let (a, b) = alpha_beta(&z, &e).map_err(Failure::domain)?;
                Specialization { label: format!("zeta={z},eta={e}"), images: Some((r(&a), r(&b))) }
            }
            None => {
                let (a, b) = alpha_beta(&FieldElem::zeta(), &FieldElem::eta()).map_err(Failure::domain)?;
                Specialization { label: "zeta-eta".into(), images: Some((a, b)) }
            }
        },
    })
}

/// The Jack-side parameters.
pub fn jack_mode(o: &Opts) -> Result<(Mode<FieldElem>, String), Failure> {
    check_flags(o)?;
    let r = |x: &Rational| FieldElem::from_rational(x);
    Ok(match o.mode {
        ModeArg::Alpha => match &o.alpha {
            None => (Mode::symbolic_alpha(), "alpha".into()),
            Some(a) => (Mode::Alpha(r(a)), format!("alpha={a}")),
        },
        ModeArg::ZetaEta => match pair(o)? {
            None => (Mode::symbolic_zeta_eta(), "zeta-eta".into()),
            Some((z, e)) => (Mode::ZetaEta(r(&z), r(&e)), format!("zeta={z},eta={e}")),
        },
    })
}
