use derlog_core::{
    check_bound_and_sharpness, component_condition, derlog_hypersurface, derlog_ideal, examples,
    generalized_saito_check, is_reduced, linear_free_divisor_check, parse_poly, parse_poly_list,
    run_example, saito_criterion, saito_second_criterion, smooth_criterion, CheckReport,
    ComponentSpec, Evidence, FieldModule, Ideal, Point, Poly, Rational, Ring, SymbolicPowers,
    VectorField,
};

use crate::error::CliError;
use crate::input::{split_component, InputDoc};
use crate::{Command, Objects};

struct Ctx<'a> {
    doc: &'a InputDoc,
    obj: &'a Objects,
    ring: Ring,
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

impl<'a> Ctx<'a> {
    fn new(doc: &'a InputDoc, obj: &'a Objects) -> Result<Ctx<'a>, CliError> {
        let ring = match (&obj.ring, &doc.ring) {
            (Some(spec), Some(declared)) => {
                let given = Ring::parse(spec)?;
                if given.vars() != declared.vars() {
                    return Err(usage("--ring differs from the ring of the input file"));
                }
                declared.clone()
            }
            (Some(spec), None) => Ring::parse(spec)?,
            (None, Some(declared)) => declared.clone(),
            (None, None) => return Err(usage("no ring given; use --ring or an input file")),
        };
        Ok(Ctx { doc, obj, ring })
    }

    fn poly(&self) -> Result<Option<Poly>, CliError> {
        if let Some(text) = &self.obj.f {
            if let Some(p) = self.doc.poly(text.trim()) {
                return Ok(Some(p.clone()));
            }
            return Ok(Some(parse_poly(text, &self.ring)?));
        }
        Ok(match self.doc.poly("f") {
            Some(p) => Some(p.clone()),
            None if self.doc.polys.len() == 1 => Some(self.doc.polys[0].1.clone()),
            None => None,
        })
    }

    fn require_poly(&self) -> Result<Poly, CliError> {
        self.poly()?.ok_or_else(|| usage("a polynomial is required (--f)"))
    }

    fn ideal(&self) -> Result<Option<Ideal>, CliError> {
        if let Some(text) = &self.obj.ideal {
            if let Some(i) = self.doc.ideal(text.trim()) {
                return Ok(Some(i.clone()));
            }
            return Ok(Some(Ideal::new(&self.ring, parse_poly_list(text, &self.ring)?)?));
        }
        Ok(if self.doc.ideals.len() == 1 { Some(self.doc.ideals[0].1.clone()) } else { None })
    }

    fn fields(&self) -> Result<Vec<VectorField>, CliError> {
        let mut out = Vec::new();
        for text in &self.obj.fields {
            let name = text.trim();
            if let Some(m) = self.doc.module(name) {
                out.extend(m.iter().cloned());
            } else if let Some(v) = self.doc.field(name) {
                out.push(v.clone());
            } else {
                out.push(VectorField::parse(text, &self.ring)?);
            }
        }
        if out.is_empty() {
            if self.doc.modules.len() == 1 {
                out = self.doc.modules[0].1.clone();
            } else {
                out = self.doc.fields.iter().map(|(_, v)| v.clone()).collect();
            }
        }
        Ok(out)
    }

    fn require_fields(&self) -> Result<Vec<VectorField>, CliError> {
        let f = self.fields()?;
        if f.is_empty() {
            return Err(usage("vector fields are required (--fields)"));
        }
        Ok(f)
    }

    /// Derlog of `--ideal` or `--f`, with a caveat when `f` is not reduced.
    fn derlog(&self, report: &mut CheckReport) -> Result<Option<FieldModule>, CliError> {
        if let Some(i) = self.ideal()? {
            return Ok(Some(derlog_ideal(&i)?));
        }
        match self.poly()? {
            Some(f) => {
                if !is_reduced(&f)? {
                    report.caveat("input polynomial is not reduced");
                }
                Ok(Some(derlog_hypersurface(&f)?))
            }
            None => Ok(None),
        }
    }

    /// Explicit fields if any, otherwise Derlog of the given data.
    fn module(&self, report: &mut CheckReport) -> Result<Option<FieldModule>, CliError> {
        let fields = self.fields()?;
        if !fields.is_empty() {
            return Ok(Some(FieldModule::new(&self.ring, fields)?));
        }
        self.derlog(report)
    }

    fn components(&self) -> Result<Vec<ComponentSpec>, CliError> {
        let mut out = Vec::new();
        for text in &self.obj.components {
            let (name, body) =
                text.split_once('=').ok_or_else(|| usage("components look like `<name> = <gens>, dim <d>`"))?;
            let (gens, dim) =
                split_component(body).ok_or_else(|| usage("components look like `<name> = <gens>, dim <d>`"))?;
            out.push(ComponentSpec::new(name.trim(), Ideal::parse(gens, &self.ring)?, dim)?);
        }
        out.extend(self.doc.components.iter().cloned());
        Ok(out)
    }

    fn ks(&self, k: Option<usize>) -> Result<Vec<usize>, CliError> {
        let n = self.ring.nvars();
        match k {
            Some(k) if k == 0 || k > n => Err(usage(format!("--k must lie in 1..={n}"))),
            Some(k) => Ok(vec![k]),
            None => Ok((1..=n).collect()),
        }
    }
}

fn parse_point(ring: &Ring, text: Option<&str>) -> Result<Point, CliError> {
    let Some(text) = text else {
        return Ok(Point::origin(ring));
    };
    let coords = text
        .split(',')
        .map(|s| s.trim().parse::<Rational>().map_err(|_| usage(format!("bad coordinate `{s}`"))))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Point::new(ring, coords)?)
}

pub fn execute(cmd: &Command, doc: &InputDoc, long: bool) -> Result<CheckReport, CliError> {
    match cmd {
        Command::Derlog(obj) => {
            let ctx = Ctx::new(doc, obj)?;
            let mut report = CheckReport::new("derlog");
            let m = ctx.derlog(&mut report)?.ok_or_else(|| usage("derlog needs --f or --ideal"))?;
            report.add("count", Evidence::Integer(m.len() as i64));
            report.add("generators", Evidence::module(&m));
            report.set_verdict(true);
            Ok(report)
        }
        Command::Fitting { obj, k } => {
            let ctx = Ctx::new(doc, obj)?;
            let mut report = CheckReport::new("fitting");
            let m = ctx.module(&mut report)?.ok_or_else(|| usage("fitting needs --fields, --f or --ideal"))?;
            for k in ctx.ks(*k)? {
                report.add(&format!("I_{k}"), Evidence::ideal(&m.fitting_ideal(k)?));
            }
            report.set_verdict(true);
            Ok(report)
        }
        Command::Bound { obj, k } => {
            let ctx = Ctx::new(doc, obj)?;
            let comps = ctx.components()?;
            if comps.is_empty() {
                return Err(usage("bound needs at least one --component"));
            }
            let mut scratch = CheckReport::new("bound");
            if let Some(m) = ctx.module(&mut scratch)? {
                let kmax = k.unwrap_or(ctx.ring.nvars());
                ctx.ks(Some(kmax))?;
                let mut report = check_bound_and_sharpness(&m, &comps, kmax)?;
                for c in scratch.caveats {
                    report.caveat(c);
                }
                return Ok(report);
            }
            let mut powers = SymbolicPowers::new(&comps);
            for k in ctx.ks(*k)? {
                scratch.add(&format!("bound_{k}"), Evidence::ideal(&powers.bound(&ctx.ring, k)?));
            }
            if powers.used_saturation() {
                scratch.caveat("symbolic power obtained by saturating the ordinary power");
            }
            scratch.set_verdict(true);
            Ok(scratch)
        }
        Command::CheckSaito(obj) => {
            let ctx = Ctx::new(doc, obj)?;
            Ok(saito_criterion(&ctx.require_fields()?, &ctx.require_poly()?)?)
        }
        Command::CheckSaito2(obj) => {
            let ctx = Ctx::new(doc, obj)?;
            Ok(saito_second_criterion(&ctx.require_fields()?, &ctx.ring)?)
        }
        Command::CheckSmooth { obj, dim, point } => {
            let ctx = Ctx::new(doc, obj)?;
            let m = FieldModule::new(&ctx.ring, ctx.require_fields()?)?;
            let p = parse_point(&ctx.ring, point.as_deref())?;
            Ok(smooth_criterion(&m, *dim, &p)?)
        }
        Command::CheckComponent(obj) => {
            let ctx = Ctx::new(doc, obj)?;
            let mut report = CheckReport::new("component-condition");
            let m = ctx.module(&mut report)?.ok_or_else(|| usage("needs --fields, --f or --ideal"))?;
            let comps = ctx.components()?;
            if comps.is_empty() {
                return Err(usage("check-component needs at least one --component"));
            }
            let mut pass = true;
            for c in &comps {
                let sub = component_condition(&m, c)?;
                pass &= sub.is_pass();
                report.absorb(&c.label, &sub);
                report.add(&format!("{}.verdict", c.label), Evidence::Text(sub.verdict.to_string()));
            }
            report.set_verdict(pass);
            Ok(report)
        }
        Command::CheckGeneralized { obj, factors } => {
            let ctx = Ctx::new(doc, obj)?;
            let f = ctx.require_poly()?;
            let m = FieldModule::new(&ctx.ring, ctx.require_fields()?)?;
            let factors = factors
                .iter()
                .map(|t| match doc.poly(t.trim()) {
                    Some(p) => Ok(p.clone()),
                    None => parse_poly(t, &ctx.ring),
                })
                .collect::<Result<Vec<_>, _>>()?;
            Ok(generalized_saito_check(&m, &f, &factors)?)
        }
        Command::CheckLinearFd(obj) => {
            let ctx = Ctx::new(doc, obj)?;
            Ok(linear_free_divisor_check(&ctx.require_fields()?, &ctx.ring)?)
        }
        Command::Example { name } => Ok(run_example(name, long)?),
        Command::ListExamples => {
            let mut report = CheckReport::new("list-examples");
            for e in examples() {
                let text = if e.long { format!("{} (long)", e.summary) } else { e.summary.to_string() };
                report.add(e.name, Evidence::Text(text));
            }
            report.set_verdict(true);
            Ok(report)
        }
    }
}
