//! Orthographic views of the northern and southern hemispheres side by side.
//! The southern disc is seen from below, so its x axis is mirrored.

use std::fmt::Write;

use super::input::StateFileRecord;
use super::CliError;
use crate::majorana::{constellation_of, Constellation};

const RADIUS: f64 = 100.0;
const MARGIN: f64 = 30.0;

pub fn file_name(index: usize, id: Option<&str>) -> String {
    let stem: String = match id {
        Some(id) => id
            .chars()
            .map(|c| if c.is_ascii_alphanumeric() || c == '-' || c == '_' { c } else { '_' })
            .collect(),
        None => format!("state-{index}"),
    };
    format!("{stem}.svg")
}

pub fn render_record(record: &StateFileRecord, tol: f64) -> Result<String, CliError> {
    let state = record.state().map_err(CliError::Math)?;
    let c = constellation_of(&state, tol).map_err(|e| CliError::Math(e.to_string()))?;
    Ok(render(&c, record.id.as_deref()))
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

pub fn render(c: &Constellation, title: Option<&str>) -> String {
    let width = 4.0 * RADIUS + 3.0 * MARGIN;
    let height = 2.0 * RADIUS + 2.5 * MARGIN;
    let north = (MARGIN + RADIUS, MARGIN + RADIUS);
    let south = (2.0 * MARGIN + 3.0 * RADIUS, MARGIN + RADIUS);

    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width:.0}" height="{height:.0}" viewBox="0 0 {width:.0} {height:.0}">"#
    );
    if let Some(t) = title {
        let _ = writeln!(s, "<title>{}</title>", escape(t));
    }
    for (label, (cx, cy)) in [("north (z >= 0)", north), ("south (z < 0)", south)] {
        let _ = writeln!(
            s,
            r##"<circle cx="{cx:.3}" cy="{cy:.3}" r="{RADIUS:.3}" fill="#f4f6fb" stroke="#445" stroke-width="1"/>"##
        );
        let _ = writeln!(
            s,
            r##"<text x="{cx:.3}" y="{:.3}" font-family="sans-serif" font-size="12" text-anchor="middle" fill="#445">{label}</text>"##,
            cy + RADIUS + 18.0
        );
    }
    for star in c.stars() {
        let v = star.root.to_unit_vector();
        let ((cx, cy), x) = if v[2] >= 0.0 { (north, v[0]) } else { (south, -v[0]) };
        let px = cx + RADIUS * x;
        let py = cy - RADIUS * v[1];
        let r = 4.0 + 2.0 * (star.multiplicity as f64 - 1.0);
        let sp = star.spinor();
        let _ = writeln!(
            s,
            r##"<circle cx="{px:.3}" cy="{py:.3}" r="{r:.3}" fill="#c8302c" fill-opacity="0.85"><title>alpha={:.2} deg, beta={:.2} deg, multiplicity {}</title></circle>"##,
            sp.alpha.to_degrees(),
            sp.beta.to_degrees(),
            star.multiplicity
        );
        if star.multiplicity > 1 {
            let _ = writeln!(
                s,
                r##"<text x="{:.3}" y="{:.3}" font-family="sans-serif" font-size="10" fill="#222">{}</text>"##,
                px + r + 2.0,
                py - r,
                star.multiplicity
            );
        }
    }
    s.push_str("</svg>\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sphere::Root;

    #[test]
    fn one_marker_per_star_and_stable_bytes() {
        let c = Constellation::from_roots(&[Root::finite(0.0, 0.0); 3]).unwrap();
        let a = render(&c, Some("zeros"));
        assert_eq!(a.matches("multiplicity 3").count(), 1);
        assert_eq!(a, render(&c, Some("zeros")));
        assert!(a.contains("beta=0.00 deg"));
        assert_eq!(file_name(2, Some("a/b c")), "a_b_c.svg");
        assert_eq!(file_name(2, None), "state-2.svg");
    }
}
