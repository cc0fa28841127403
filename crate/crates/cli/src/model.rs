//! Evaluation of a parsed document into core objects.

use std::collections::BTreeMap;

use thiserror::Error;

use folia_core::algebra::{MPoly, Rat, Ring, RingRef};
use folia_core::forms::{validate_foliation, FoliationError, FoliationP3, PolyForm};
use folia_core::ideal::{intersect, Ideal, IdealError};
use folia_core::lab::{CurveComponent, LabError};

use crate::catalog::{build_logarithmic, build_pencil, CatalogError};
use crate::dsl::{self, ComponentDecl, DslError, Expr, ExprKind, Space, Statement};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error(transparent)]
    Syntax(#[from] DslError),
    #[error("{0}")]
    Semantic(String),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Foliation(#[from] FoliationError),
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error(transparent)]
    Lab(#[from] LabError),
}

fn semantic(src: &str, pos: usize, msg: impl Into<String>) -> ModelError {
    ModelError::Syntax(dsl::error_at(src, pos, msg))
}

enum Value {
    Fun(MPoly),
    Form(Vec<MPoly>),
}

struct Evaluator<'a> {
    src: &'a str,
    ring: RingRef,
}

impl Evaluator<'_> {
    fn value(&self, e: &Expr) -> Result<Value, ModelError> {
        let ring = &self.ring;
        let n = ring.nvars();
        Ok(match &e.kind {
            ExprKind::Num(k) => Value::Fun(MPoly::constant(ring, Rat::from_integer(k.clone()))),
            ExprKind::Var(v) => Value::Fun(MPoly::var(ring, ring.index_of(v).expect("declared"))),
            ExprKind::Diff(v) => {
                let mut cs = vec![MPoly::zero(ring); n];
                cs[ring.index_of(v).expect("declared")] = MPoly::one(ring);
                Value::Form(cs)
            }
            ExprKind::DiffOf(inner) => match self.value(inner)? {
                Value::Fun(f) => Value::Form((0..n).map(|i| f.partial(i)).collect()),
                Value::Form(_) => return Err(semantic(self.src, e.pos, "d of a 1-form is not a 1-form")),
            },
            ExprKind::Neg(inner) => match self.value(inner)? {
                Value::Fun(f) => Value::Fun(-&f),
                Value::Form(cs) => Value::Form(cs.iter().map(|c| -c).collect()),
            },
            ExprKind::Add(a, b) | ExprKind::Sub(a, b) => {
                let sign = if matches!(e.kind, ExprKind::Add(..)) { 1 } else { -1 };
                match (self.value(a)?, self.value(b)?) {
                    (Value::Fun(x), Value::Fun(y)) => Value::Fun(if sign > 0 { &x + &y } else { &x - &y }),
                    (Value::Form(x), Value::Form(y)) => {
                        Value::Form(x.iter().zip(&y).map(|(p, q)| if sign > 0 { p + q } else { p - q }).collect())
                    }
                    _ => return Err(semantic(self.src, e.pos, "cannot add a function and a 1-form")),
                }
            }
            ExprKind::Mul(a, b) => match (self.value(a)?, self.value(b)?) {
                (Value::Fun(x), Value::Fun(y)) => Value::Fun(&x * &y),
                (Value::Fun(f), Value::Form(cs)) | (Value::Form(cs), Value::Fun(f)) => {
                    Value::Form(cs.iter().map(|c| c * &f).collect())
                }
                (Value::Form(_), Value::Form(_)) => {
                    return Err(semantic(self.src, e.pos, "nonlinear differentials: a product of two 1-forms"))
                }
            },
            ExprKind::Div(a, b) => {
                let den = match self.value(b)? {
                    Value::Fun(f) if f.is_constant() && !f.is_zero() => f.constant_term().recip(),
                    _ => return Err(semantic(self.src, e.pos, "division is only by nonzero constants")),
                };
                match self.value(a)? {
                    Value::Fun(f) => Value::Fun(f.scale(&den)),
                    Value::Form(cs) => Value::Form(cs.iter().map(|c| c.scale(&den)).collect()),
                }
            }
            ExprKind::Pow(base, k) => match self.value(base)? {
                Value::Fun(f) => Value::Fun(f.pow(*k)),
                Value::Form(cs) if *k == 1 => Value::Form(cs),
                Value::Form(_) => return Err(semantic(self.src, e.pos, "nonlinear differentials: a power of a 1-form")),
            },
        })
    }

    fn function(&self, e: &Expr) -> Result<MPoly, ModelError> {
        match self.value(e)? {
            Value::Fun(f) => Ok(f),
            Value::Form(_) => Err(semantic(self.src, e.pos, "expected a polynomial, found a 1-form")),
        }
    }

    fn one_form(&self, e: &Expr) -> Result<PolyForm, ModelError> {
        match self.value(e)? {
            Value::Form(cs) => Ok(PolyForm::one_form(&self.ring, cs)),
            Value::Fun(f) if f.is_zero() => Ok(PolyForm::zero(&self.ring, 1)),
            Value::Fun(_) => Err(semantic(self.src, e.pos, "expected a 1-form, found a polynomial")),
        }
    }
}

/// A declared component after evaluation; verification happens on demand.
#[derive(Debug, Clone)]
pub struct ComponentSpec {
    pub name: String,
    pub ideal: Ideal,
    pub param: Option<Vec<MPoly>>,
    pub point: Option<Vec<Rat>>,
    pub parts: Vec<String>,
    /// The ideal is the intersection of the parts' ideals.
    pub from_parts: bool,
}

#[derive(Debug, Clone)]
pub struct Pullback {
    pub name: String,
    pub ring: RingRef,
    pub eta: PolyForm,
    pub via: Vec<MPoly>,
}

#[derive(Debug, Clone)]
pub struct Model {
    pub ring: RingRef,
    pub space: Space,
    pub omega: PolyForm,
    pub foliation: Option<FoliationP3>,
    pub components: Vec<ComponentSpec>,
    pub points: BTreeMap<String, Vec<Rat>>,
    pub pullback: Option<Pullback>,
    pub document: dsl::Document,
}

fn form_degree(omega: &PolyForm) -> u32 {
    omega.coefficients().iter().filter_map(|c| c.degree().finite()).max().unwrap_or(1).saturating_sub(1)
}

impl Model {
    pub fn from_source(src: &str) -> Result<Model, ModelError> {
        let document = dsl::parse_document(src)?;
        let mut vars = None;
        let mut space = None;
        let mut degree = None;
        let mut source: Option<&Statement> = None;
        let mut decls: Vec<&ComponentDecl> = Vec::new();
        let mut points = BTreeMap::new();
        let mut pullback_stmt = None;
        for s in &document.statements {
            match s {
                Statement::Vars(v) => vars = Some(v.clone()),
                Statement::Space(sp) => space = Some(*sp),
                Statement::Degree(d) => degree = Some(*d),
                Statement::Form(_) | Statement::Logarithmic { .. } | Statement::Pencil { .. } => {
                    if source.is_some() {
                        return Err(ModelError::Semantic("more than one form, logarithmic or pencil statement".into()));
                    }
                    source = Some(s);
                }
                Statement::Component(c) => {
                    if decls.iter().any(|d| d.name == c.name) {
                        return Err(semantic(src, c.pos, format!("component '{}' declared twice", c.name)));
                    }
                    decls.push(c);
                }
                Statement::Point { name, coords } => {
                    points.insert(name.clone(), coords.clone());
                }
                Statement::Pullback { .. } => pullback_stmt = Some(s),
            }
        }
        let vars = vars.ok_or_else(|| ModelError::Semantic("missing 'vars' statement".into()))?;
        let ring = Ring::new(&vars);
        let space = space.unwrap_or(if vars.len() == 4 { Space::Projective } else { Space::Affine });
        let ev = Evaluator { src, ring: ring.clone() };
        let stmt = source.ok_or_else(|| ModelError::Semantic("missing 'form' statement".into()))?;
        let (omega, foliation) = match stmt {
            Statement::Form(e) => {
                let omega = ev.one_form(e)?;
                let foliation = match space {
                    Space::Projective => {
                        if vars.len() != 4 {
                            return Err(ModelError::Semantic("a projective document needs four variables".into()));
                        }
                        Some(validate_foliation(omega.clone(), degree.unwrap_or_else(|| form_degree(&omega)))?)
                    }
                    Space::Affine => None,
                };
                (omega, foliation)
            }
            Statement::Logarithmic { hypersurfaces, weights } => {
                let hs: Vec<MPoly> = hypersurfaces.iter().map(|h| ev.function(h)).collect::<Result<_, _>>()?;
                let f = build_logarithmic(&hs, weights)?;
                (f.omega().clone(), Some(f))
            }
            Statement::Pencil { f, g, p, q } => {
                let fol = build_pencil(&ev.function(f)?, &ev.function(g)?, *p, *q)?;
                (fol.omega().clone(), Some(fol))
            }
            _ => unreachable!("only form statements are recorded"),
        };
        if let (Some(f), Some(d)) = (&foliation, degree) {
            if f.degree() != d {
                return Err(ModelError::Semantic(format!("declared degree {d} but the form has degree {}", f.degree())));
            }
        }
        if foliation.is_some() && space == Space::Affine {
            return Err(ModelError::Semantic("constructors build projective foliations".into()));
        }
        for (name, p) in &points {
            if p.len() != vars.len() {
                return Err(ModelError::Semantic(format!("point '{name}' needs {} coordinates", vars.len())));
            }
        }
        let mut components = Vec::new();
        for c in &decls {
            let spec = Self::component(&ev, c, &decls, src)?;
            components.push(spec);
        }
        let pullback = match pullback_stmt {
            Some(Statement::Pullback { name, vars: local, eta, via }) => {
                let lring = Ring::new(local);
                let lev = Evaluator { src, ring: lring.clone() };
                let eta_form = lev.one_form(eta)?;
                let images: Vec<MPoly> = via.iter().map(|v| ev.function(v)).collect::<Result<_, _>>()?;
                if images.len() != local.len() {
                    return Err(ModelError::Semantic(format!("pullback '{name}' needs {} images", local.len())));
                }
                Some(Pullback { name: name.clone(), ring: lring, eta: eta_form, via: images })
            }
            _ => None,
        };
        let mut model = Model { ring, space, omega, foliation, components: Vec::new(), points, pullback, document };
        model.components = Self::resolve_parts(components)?;
        Ok(model)
    }

    fn component(ev: &Evaluator, c: &ComponentDecl, all: &[&ComponentDecl], src: &str) -> Result<ComponentSpec, ModelError> {
        let parts = c.parts.clone().unwrap_or_default();
        for p in &parts {
            if !all.iter().any(|d| &d.name == p) || p == &c.name {
                return Err(semantic(src, c.pos, format!("component '{}' lists unknown part '{p}'", c.name)));
            }
        }
        let ideal = match &c.ideal {
            Some(gens) => Ideal::new(&ev.ring, gens.iter().map(|g| ev.function(g)).collect::<Result<_, _>>()?),
            None if !parts.is_empty() => Ideal::unit(&ev.ring),
            None => return Err(semantic(src, c.pos, format!("component '{}' needs an ideal or parts", c.name))),
        };
        let param = match &c.param {
            Some((s, t, images)) => {
                if images.len() != ev.ring.nvars() {
                    return Err(semantic(src, c.pos, format!("parametrization of '{}' needs {} coordinates", c.name, ev.ring.nvars())));
                }
                let pev = Evaluator { src, ring: Ring::new(&[s.as_str(), t.as_str()]) };
                Some(images.iter().map(|e| pev.function(e)).collect::<Result<Vec<_>, _>>()?)
            }
            None => None,
        };
        if let Some(p) = &c.point {
            if p.len() != ev.ring.nvars() {
                return Err(semantic(src, c.pos, format!("point of '{}' needs {} coordinates", c.name, ev.ring.nvars())));
            }
        }
        Ok(ComponentSpec { name: c.name.clone(), ideal, param, point: c.point.clone(), parts, from_parts: c.ideal.is_none() })
    }

    /// Components given by parts get the intersection of their parts' ideals.
    fn resolve_parts(mut comps: Vec<ComponentSpec>) -> Result<Vec<ComponentSpec>, ModelError> {
        for i in 0..comps.len() {
            if !comps[i].from_parts {
                continue;
            }
            let mut acc: Option<Ideal> = None;
            for name in comps[i].parts.clone() {
                let part = comps.iter().find(|c| c.name == name).expect("checked");
                if !part.parts.is_empty() {
                    return Err(ModelError::Semantic(format!("part '{name}' of '{}' has parts itself", comps[i].name)));
                }
                acc = Some(match acc {
                    None => part.ideal.clone(),
                    Some(a) => intersect(&a, &part.ideal)?,
                });
            }
            comps[i].ideal = acc.expect("parts are non-empty").grevlex()?.to_ideal();
        }
        Ok(comps)
    }

    pub fn component_spec(&self, name: &str) -> Result<&ComponentSpec, ModelError> {
        self.components
            .iter()
            .find(|c| c.name == name)
            .ok_or_else(|| ModelError::Semantic(format!("unknown component '{name}'")))
    }

    /// Verified curve component (projective documents only).
    pub fn curve(&self, spec: &ComponentSpec) -> Result<CurveComponent, ModelError> {
        let c = CurveComponent::new(&spec.name, spec.ideal.clone(), spec.param.clone(), spec.param.is_some())?;
        Ok(match &spec.point {
            Some(p) => c.with_point(p.clone()),
            None => c,
        })
    }

    /// Components that are not unions of others.
    pub fn leaves(&self) -> Vec<&ComponentSpec> {
        self.components.iter().filter(|c| c.parts.is_empty()).collect()
    }

    pub fn foliation(&self) -> Result<&FoliationP3, ModelError> {
        self.foliation.as_ref().ok_or_else(|| ModelError::Semantic("this command needs a projective foliation".into()))
    }

    /// A named point or a literal.
    pub fn point(&self, text: &str) -> Result<Vec<Rat>, ModelError> {
        if let Some(p) = self.points.get(text.trim()) {
            return Ok(p.clone());
        }
        let p = dsl::parse_point(text)?;
        if p.len() != self.ring.nvars() {
            return Err(ModelError::Semantic(format!("point needs {} coordinates", self.ring.nvars())));
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_example_with_sugar() {
        let m = Model::from_source("vars x, y, z\nform = x*dx + (1 + x*y^2*z)*d(y^2*z)\n").unwrap();
        assert_eq!(m.space, Space::Affine);
        let expected = "x*dx + (2*x*y^3*z^2 + 2*y*z)*dy + (x*y^4*z + y^2)*dz";
        assert_eq!(m.omega.to_string(), expected);
    }

    #[test]
    fn nonlinear_differentials_are_rejected() {
        let err = Model::from_source("vars x0, x1, x2, x3\nform = dx0*dx1\n").unwrap_err();
        assert!(err.to_string().contains("nonlinear differentials"), "{err}");
        assert!(err.to_string().starts_with("line 2, column 11"), "{err}");
        let err = Model::from_source("vars x\nform = x + dx\n").unwrap_err();
        assert!(err.to_string().contains("cannot add"), "{err}");
    }

    #[test]
    fn pencil_document() {
        let m = Model::from_source("vars x0, x1, x2, x3\nform = x0*dx1 - x1*dx0\npoint p = [0:0:1:0]\n").unwrap();
        assert_eq!(m.foliation().unwrap().degree(), 0);
        assert_eq!(m.point("p").unwrap(), m.point("0:0:1:0").unwrap());
        assert!(m.point("1:2").is_err());
    }

    #[test]
    fn declared_degree_must_match() {
        let err = Model::from_source("vars x0, x1, x2, x3\ndegree 1\nform = x0*dx1 - x1*dx0\n").unwrap_err();
        assert!(matches!(err, ModelError::Foliation(_) | ModelError::Semantic(_)));
    }

    #[test]
    fn parts_build_unions() {
        let src = "vars x0, x1, x2, x3\nlogarithmic [x0, x1, x2, x3] weights [1, 2, -1, -2]\ncomponent a { ideal [x0, x1] }\ncomponent b { ideal [x0, x2] }\ncomponent ab { parts [a, b] }\n";
        let m = Model::from_source(src).unwrap();
        let ab = m.component_spec("ab").unwrap();
        assert!(ab.ideal.same_as(&Ideal::new(&m.ring, vec![MPoly::parse(&m.ring, "x0").unwrap(), MPoly::parse(&m.ring, "x1*x2").unwrap()])).unwrap());
        assert_eq!(m.leaves().len(), 2);
    }
}
