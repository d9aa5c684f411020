use serde::Serialize;

use super::format::{complex, round12, vec3, RootOut};
use super::input::StateFileRecord;
use crate::classify::{classify_state, ClassReport, CyclicOrder};
use crate::majorana::{constellation_of, Constellation};
use crate::measure::{measure3, measure4, Route};
use crate::StellarError;

#[derive(Serialize)]
struct ErrorOut<'a> {
    index: usize,
    id: Option<&'a str>,
    error: String,
}

fn error_line(index: usize, id: Option<&str>, error: String) -> (String, bool) {
    let line = serde_json::to_string(&ErrorOut { index, id, error }).expect("serializable");
    (line, false)
}

fn to_line<T: Serialize>(value: &T) -> (String, bool) {
    (serde_json::to_string(value).expect("serializable"), true)
}

#[derive(Serialize)]
#[serde(untagged)]
enum OrderOut {
    Finite(usize),
    Infinite(&'static str),
}

#[derive(Serialize)]
struct SymmetryOut {
    cyclic_order: OrderOut,
    group_label: String,
    axis: Option<[f64; 3]>,
}

#[derive(Serialize)]
struct DepressedOut {
    p: [f64; 2],
    q: [f64; 2],
    r: Option<[f64; 2]>,
    shift: [f64; 2],
    pre_rotated: bool,
}

#[derive(Serialize)]
struct ClassifyOut<'a> {
    index: usize,
    id: Option<&'a str>,
    n: usize,
    class: &'static str,
    partition: Vec<usize>,
    group: String,
    symmetry: SymmetryOut,
    depressed: DepressedOut,
    max_ghz: bool,
}

fn classify_out(index: usize, id: Option<&str>, r: &ClassReport) -> (String, bool) {
    let d = &r.depressed;
    to_line(&ClassifyOut {
        index,
        id,
        n: r.constellation.n(),
        class: r.class.as_str(),
        partition: r.partition.parts().to_vec(),
        group: r.group.clone(),
        symmetry: SymmetryOut {
            cyclic_order: match r.symmetry.cyclic_order {
                CyclicOrder::Finite(k) => OrderOut::Finite(k),
                CyclicOrder::Infinite => OrderOut::Infinite("inf"),
            },
            group_label: r.symmetry.group_label.clone(),
            axis: r.symmetry.axis.map(vec3),
        },
        depressed: DepressedOut {
            p: complex(d.p()),
            q: complex(d.q()),
            r: d.r().map(complex),
            shift: complex(d.shift()),
            pre_rotated: r.pre_rotated,
        },
        max_ghz: r.max_ghz,
    })
}

pub fn classify_line(index: usize, record: &StateFileRecord, tol: f64) -> (String, bool) {
    let id = record.id.as_deref();
    let result = record
        .state()
        .map_err(|e| e)
        .and_then(|s| classify_state(&s, tol).map_err(|e| e.to_string()));
    match result {
        Ok(report) => classify_out(index, id, &report),
        Err(e) => error_line(index, id, e),
    }
}

#[derive(Serialize)]
#[serde(untagged)]
enum DecompositionOut {
    Three {
        a_ghz: [f64; 2],
        a_w: [f64; 2],
        a_sep: [f64; 2],
        norm_check: f64,
    },
    Four {
        a_ghz: [f64; 2],
        a_w4: [f64; 2],
        a_w2x2: [f64; 2],
        a_sep: [f64; 2],
        norm_check: f64,
    },
}

#[derive(Serialize)]
struct MeasureOut<'a> {
    index: usize,
    id: Option<&'a str>,
    n: usize,
    dent: f64,
    dent_clamped: f64,
    route: &'static str,
    decomposition: Option<DecompositionOut>,
}

fn route_name(route: Route) -> &'static str {
    match route {
        Route::SeparableByClass => "separable",
        Route::Direct => "direct",
        Route::Compressed { pre_rotated: false } => "compressed",
        Route::Compressed { pre_rotated: true } => "compressed-pre-rotated",
    }
}

pub fn measure_line(index: usize, record: &StateFileRecord) -> (String, bool) {
    let id = record.id.as_deref();
    let state = match record.state() {
        Ok(s) => s,
        Err(e) => return error_line(index, id, e),
    };
    let result = match state.n() {
        3 => measure3(&state).map(|m| {
            let d = m.decomposition.map(|d| DecompositionOut::Three {
                a_ghz: complex(d.a_ghz),
                a_w: complex(d.a_w),
                a_sep: complex(d.a_sep),
                norm_check: round12(d.norm_check),
            });
            (m.dent, m.dent_clamped(), m.route, d)
        }),
        4 => measure4(&state).map(|m| {
            let d = m.decomposition.map(|d| DecompositionOut::Four {
                a_ghz: complex(d.a_ghz),
                a_w4: complex(d.a_w4),
                a_w2x2: complex(d.a_w2x2),
                a_sep: complex(d.a_sep),
                norm_check: round12(d.norm_check),
            });
            (m.dent, m.dent_clamped(), m.route, d)
        }),
        n => Err(StellarError::UnsupportedQubits(n)),
    };
    match result {
        Ok((dent, clamped, route, decomposition)) => to_line(&MeasureOut {
            index,
            id,
            n: state.n(),
            dent: round12(dent),
            dent_clamped: round12(clamped),
            route: route_name(route),
            decomposition,
        }),
        Err(e) => error_line(index, id, e.to_string()),
    }
}

#[derive(Serialize)]
pub struct StarOut {
    pub alpha: f64,
    pub beta: f64,
    pub multiplicity: usize,
    pub root: RootOut,
}

pub fn stars_out(c: &Constellation) -> Vec<StarOut> {
    c.stars()
        .iter()
        .map(|s| {
            let sp = s.spinor();
            StarOut {
                alpha: round12(sp.alpha),
                beta: round12(sp.beta),
                multiplicity: s.multiplicity,
                root: RootOut::from(&s.root),
            }
        })
        .collect()
}

#[derive(Serialize)]
struct ConstellationOut<'a> {
    index: usize,
    id: Option<&'a str>,
    n: usize,
    stars: Vec<StarOut>,
}

pub fn constellation_line(index: usize, record: &StateFileRecord, tol: f64) -> (String, bool) {
    let id = record.id.as_deref();
    let result = record
        .state()
        .and_then(|s| constellation_of(&s, tol).map_err(|e| e.to_string()));
    match result {
        Ok(c) => to_line(&ConstellationOut {
            index,
            id,
            n: c.n(),
            stars: stars_out(&c),
        }),
        Err(e) => error_line(index, id, e),
    }
}
