use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use serde::Serialize;
use vilenkin::fmra::{self, MraLift};
use vilenkin::io::{from_vsf, to_vsf};
use vilenkin::shift_invariant::{frame_report, periodization, FrameReport};
use vilenkin::transform::{fourier, inverse_fourier, slow_fourier, slow_inverse_fourier};
use vilenkin::wavelet::{self, ExistenceReport, FrameCheck, OrthogonalityCheck, WaveletCertificate};
use vilenkin::{Error, FilterSpec, PeriodicSet, Prime, Side, StepFunction, Window};

use crate::config::{CommandKind, Format, RunConfig};
use crate::exit::{self, Failure};

pub fn run(config: &RunConfig) -> Result<(), Failure> {
    match config.command {
        CommandKind::Transform => transform(config),
        CommandKind::Analyze => analyze(config),
        CommandKind::Wavelet => wavelet(config),
        CommandKind::MraLift => mra_lift(config),
    }
}

fn read_function(path: &Path) -> Result<StepFunction, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    from_vsf(&text).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn write_file(dir: &Path, name: &str, contents: &str) -> Result<(), Failure> {
    fs::create_dir_all(dir)?;
    fs::write(dir.join(name), contents)?;
    Ok(())
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report types serialize") + "\n"
}

type Transform = fn(&StepFunction) -> vilenkin::Result<StepFunction>;

fn transform(config: &RunConfig) -> Result<(), Failure> {
    let f = read_function(&config.inputs[0])?;
    let (fast, slow): (Transform, Transform) = if config.inverse {
        (inverse_fourier, slow_inverse_fourier)
    } else {
        (fourier, slow_fourier)
    };
    let out = fast(&f)?;
    if config.oracle {
        let deviation = out.max_abs_diff(&slow(&f)?)?;
        eprintln!("oracle max deviation: {deviation:e}");
        if deviation > config.tol {
            return Err(Failure::new(
                exit::ORACLE_MISMATCH,
                format!("fast and direct transforms differ by {deviation:e} (tolerance {:e})", config.tol),
            ));
        }
    }
    let text = to_vsf(&out);
    match &config.output {
        Some(path) => fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

#[derive(Serialize)]
struct TableRow {
    cell: String,
    lambda_star: f64,
    value_re: f64,
    value_im: f64,
}

fn table_rows(f: &StepFunction) -> Vec<TableRow> {
    f.cells()
        .map(|(cell, v)| TableRow {
            lambda_star: cell.representative().lambda_f64(),
            cell: cell.to_string(),
            value_re: v.re,
            value_im: v.im,
        })
        .collect()
}

fn csv(rows: &[TableRow]) -> String {
    let mut out = String::from("lambda_star,value_re,value_im\n");
    for r in rows {
        writeln!(out, "{},{},{}", r.lambda_star, r.value_re, r.value_im).unwrap();
    }
    out
}

fn cell_list(set: &PeriodicSet) -> String {
    if set.is_empty() {
        "-".into()
    } else {
        set.cell_strings().join(" ")
    }
}

#[derive(Serialize)]
struct AnalyzeReport {
    p: u32,
    resolution: u32,
    #[serde(flatten)]
    frame: FrameReport,
    spectrum_measure: f64,
    spectrum: Vec<String>,
    zero_set: Vec<String>,
    periodization: Vec<TableRow>,
}

fn analyze(config: &RunConfig) -> Result<(), Failure> {
    let phi = read_function(&config.inputs[0])?;
    if phi.is_zero() {
        return Err(Failure::new(exit::EMPTY_SUPPORT, "empty support: the generator is zero"));
    }
    let p_phi = periodization(&phi)?;
    let resolution = config.resolution.max(p_phi.window().hi as u32);
    let table = p_phi.refine(Window::fundamental(resolution))?;
    let frame = FrameReport::from_periodization(&p_phi)?;
    let support = frame.support().at_resolution(resolution)?;
    let zeros = frame.zero_set.at_resolution(resolution)?;
    let report = AnalyzeReport {
        p: phi.p().get(),
        resolution,
        spectrum_measure: support.measure(),
        spectrum: support.cell_strings(),
        zero_set: zeros.cell_strings(),
        frame,
        periodization: table_rows(&table),
    };
    let text = match config.format {
        Format::Csv => csv(&report.periodization),
        Format::Json => to_json(&report),
        Format::Text => {
            let f = &report.frame;
            let mut out = String::new();
            writeln!(out, "p = {}", report.p).unwrap();
            writeln!(out, "frame bounds: C = {}, D = {}", f.lower, f.upper).unwrap();
            writeln!(
                out,
                "bessel = {}, frame = {}, parseval = {}, orthonormal = {}",
                f.bessel, f.frame, f.parseval, f.orthonormal
            )
            .unwrap();
            writeln!(out, "spectrum (measure {}): {}", report.spectrum_measure, cell_list(&support)).unwrap();
            writeln!(out, "zero set: {}", cell_list(&zeros)).unwrap();
            writeln!(out, "periodization at resolution {resolution}:").unwrap();
            for r in &report.periodization {
                writeln!(out, "  {} {} {}", r.cell, r.value_re, r.value_im).unwrap();
            }
            out
        }
    };
    print!("{text}");
    Ok(())
}

#[derive(Serialize)]
struct CertificateJson<'a> {
    p: u32,
    passed: bool,
    input_bounds: [f64; 2],
    output_bounds: [f64; 2],
    delta2: Vec<String>,
    delta1: Vec<String>,
    eta_v0: Vec<String>,
    blocked_measure: f64,
    blocked: Vec<String>,
    unified_residual: f64,
    frame: &'a FrameCheck,
    orthogonality: &'a OrthogonalityCheck,
    existence: &'a ExistenceReport,
}

impl<'a> CertificateJson<'a> {
    fn new(cert: &'a WaveletCertificate, existence: &'a ExistenceReport) -> Self {
        let d = &cert.deltas;
        CertificateJson {
            p: 2,
            passed: cert.passed,
            input_bounds: [cert.input_bounds.0, cert.input_bounds.1],
            output_bounds: [cert.output_bounds.0, cert.output_bounds.1],
            delta2: d.delta2.cell_strings(),
            delta1: d.delta1.cell_strings(),
            eta_v0: d.eta_v0.cell_strings(),
            blocked_measure: d.blocked_measure.unwrap_or(0.0),
            blocked: d.blocked.as_ref().map(PeriodicSet::cell_strings).unwrap_or_default(),
            unified_residual: cert.unified_residual,
            frame: &cert.frame,
            orthogonality: &cert.orthogonality,
            existence,
        }
    }
}

fn wavelet(config: &RunConfig) -> Result<(), Failure> {
    let phi = read_function(&config.inputs[0])?;
    if phi.p() != Prime::TWO {
        return Err(Error::RequiresDyadic(phi.p().get()).into());
    }
    if phi.is_zero() {
        return Err(Failure::new(exit::EMPTY_SUPPORT, "empty support: the generator is zero"));
    }
    let m = match config.inputs.get(1) {
        Some(path) => FilterSpec::new(read_function(path)?)?,
        None => fmra::minimal_filter(&phi, &phi, 1)?,
    };
    let frame = frame_report(&phi)?;
    let bounds = (frame.lower, frame.upper);
    let existence = wavelet::existence_conditions(&phi, &m, bounds)?;
    let cert = match wavelet::construct_wavelet(&phi, &m, bounds) {
        Ok(cert) => cert,
        Err(Error::Blocked { measure, cells }) => {
            return Err(Failure::new(
                exit::BLOCKED,
                format!(
                    "blocked set E has measure {measure}; no single wavelet generates W_0\nE: {}\n\
                     condition (i) fails on: {}\ncondition (ii) fails on: {}",
                    cells.join(" "),
                    existence.failing_i.join(" "),
                    existence.failing_ii.join(" "),
                ),
            ))
        }
        Err(e) => return Err(e.into()),
    };
    let dir = config.out_dir.as_deref().expect("wavelet has an output directory");
    let json = to_json(&CertificateJson::new(&cert, &existence));
    write_file(dir, "psi.vsf", &to_vsf(&cert.psi))?;
    write_file(dir, "psi_hat.vsf", &to_vsf(&cert.psi_hat))?;
    write_file(dir, "low_pass.vsf", &to_vsf(m.table()))?;
    write_file(dir, "high_pass.vsf", &to_vsf(cert.high_pass.table()))?;
    write_file(dir, "certificate.json", &json)?;
    match config.format {
        Format::Json => print!("{json}"),
        _ => {
            println!("certificate: {}", if cert.passed { "passed" } else { "FAILED" });
            println!("frame bounds of psi: C' = {}, D' = {}", cert.output_bounds.0, cert.output_bounds.1);
            println!("Delta_2: {}", cell_list(&cert.deltas.delta2));
            println!("Delta_1: {}", cell_list(&cert.deltas.delta1));
            println!("fiber orthogonality residual: {:e}", cert.orthogonality.residual);
            println!("wrote psi.vsf, psi_hat.vsf, low_pass.vsf, high_pass.vsf, certificate.json to {}", dir.display());
        }
    }
    if cert.passed {
        Ok(())
    } else {
        Err(Failure::new(exit::FAILED, "the wavelet certificate did not pass"))
    }
}

#[derive(Serialize)]
struct LiftJson {
    p: u32,
    resolution: u32,
    depth_cap: u32,
    periodization_residual: f64,
    refinement_residual: f64,
    strata: Vec<Vec<String>>,
    depths: Vec<DepthRow>,
}

#[derive(Serialize)]
struct DepthRow {
    cell: String,
    depth: u32,
}

impl LiftJson {
    fn new(lift: &MraLift) -> Self {
        LiftJson {
            p: lift.scaling.p().get(),
            resolution: lift.resolution,
            depth_cap: lift.depth_cap,
            periodization_residual: lift.periodization_residual,
            refinement_residual: lift.refinement_residual,
            strata: lift.strata.iter().map(PeriodicSet::cell_strings).collect(),
            depths: lift.depth_table().into_iter().map(|(cell, depth)| DepthRow { cell, depth }).collect(),
        }
    }
}

fn mra_lift(config: &RunConfig) -> Result<(), Failure> {
    let phi = read_function(&config.inputs[0])?;
    if phi.side() != Side::Primal {
        return Err(Failure::usage("the generator must be a primal function"));
    }
    let lift = fmra::fmra_to_mra(&phi).map_err(|e| match e {
        Error::LimitUnmet { depth, cells } => Failure::new(
            exit::STRATA_NOT_COVERING,
            format!("strata do not cover U* within depth {depth}; uncovered: {}", cells.join(" ")),
        ),
        other => other.into(),
    })?;
    let dir = config.out_dir.as_deref().expect("mra-lift has an output directory");
    let json = to_json(&LiftJson::new(&lift));
    write_file(dir, "phi_prime.vsf", &to_vsf(&lift.scaling))?;
    write_file(dir, "phi_prime_hat.vsf", &to_vsf(&lift.scaling_hat))?;
    write_file(dir, "m_prime.vsf", &to_vsf(lift.filter.table()))?;
    write_file(dir, "strata.json", &json)?;
    match config.format {
        Format::Json => print!("{json}"),
        _ => {
            println!("strata: {}", lift.strata.len());
            for (j, s) in lift.strata.iter().enumerate() {
                println!("  E_{j} (measure {}): {}", s.measure(), cell_list(s));
            }
            println!("sup |P - 1| = {:e}", lift.periodization_residual);
            println!("refinement residual = {:e}", lift.refinement_residual);
            println!("wrote phi_prime.vsf, phi_prime_hat.vsf, m_prime.vsf, strata.json to {}", dir.display());
        }
    }
    if lift.periodization_residual <= config.tol && lift.refinement_residual <= config.tol {
        Ok(())
    } else {
        Err(Failure::new(exit::FAILED, "the lifted scaling function failed its checks"))
    }
}
