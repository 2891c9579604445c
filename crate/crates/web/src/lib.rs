//! Browser bindings. Every entry point returns a JSON string holding either
//! the result or an `error` field, so the page never has to catch exceptions.

use hocalc_core::functor::evaluate;
use hocalc_core::homotopy::pi_target;
use hocalc_core::parse::{parse_group, parse_space};
use hocalc_core::space::{expand_sigma_k_smash, hilton_milnor_pi};
use hocalc_core::{FgAbGroup, Result};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

fn respond(r: Result<Value>) -> String {
    match r {
        Ok(v) => v.to_string(),
        Err(e) => json!({ "error": e.to_string() }).to_string(),
    }
}

fn group_json(g: &FgAbGroup) -> Value {
    json!({ "text": g.to_string(), "free_rank": g.free_rank(), "torsion": g.torsion() })
}

pub fn pi_json(space: &str, n: u32) -> String {
    respond(parse_space(space).and_then(|t| {
        let r = pi_target(&t, n)?;
        Ok(json!({
            "space": t.to_string(),
            "degree": n,
            "group": group_json(&r.group),
            "rules": r.rules_used,
            "flags": r.notes.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
            "citations": r.citations,
        }))
    }))
}

pub fn expand_json(group: &str) -> String {
    respond(parse_group(group).and_then(|a| {
        let w = expand_sigma_k_smash(&a);
        let forms = |w: &hocalc_core::space::FormMultiset| {
            w.iter()
                .map(|(f, k)| json!({ "form": f.to_string(), "count": k, "bottom": f.bottom() }))
                .collect::<Vec<_>>()
        };
        let summands = (3..=5)
            .map(|n| Ok(json!({ "degree": n, "forms": forms(&hilton_milnor_pi(&w, n)?) })))
            .collect::<Result<Vec<_>>>()?;
        Ok(json!({ "group": a.to_string(), "forms": forms(&w), "summands": summands }))
    }))
}

/// `groups` holds one group, or two separated by `;` for tensor and Tor.
pub fn functor_json(name: &str, groups: &str) -> String {
    respond(groups.split(';').map(parse_group).collect::<Result<Vec<_>>>().and_then(|args| {
        let v = evaluate(name, &args)?;
        Ok(json!({ "name": name, "group": group_json(&v.group), "method": v.method }))
    }))
}

#[wasm_bindgen]
pub fn compute_pi(space: &str, n: u32) -> String {
    pi_json(space, n)
}

#[wasm_bindgen]
pub fn expand_group(group: &str) -> String {
    expand_json(group)
}

#[wasm_bindgen]
pub fn evaluate_functor(name: &str, groups: &str) -> String {
    functor_json(name, groups)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> Value {
        serde_json::from_str(s).unwrap()
    }

    #[test]
    fn pi_returns_group_text() {
        let v = parse(&pi_json("Sigma^2 K(Z/2,1)", 5));
        assert_eq!(v["group"]["text"], "Z/8");
        assert_eq!(v["space"], "Sigma^2 K(Z/2,1)");
    }

    #[test]
    fn errors_are_reported_in_json() {
        let v = parse(&pi_json("Sigma K(Z/2,1)", 9));
        assert!(v["error"].as_str().unwrap().contains("out of range"));
        let v = parse(&functor_json("gamma2", "Z/1"));
        assert!(v["error"].as_str().unwrap().contains("position 2"));
    }

    #[test]
    fn expansion_lists_forms_and_summands() {
        let v = parse(&expand_json("Z/2 + Z/4"));
        assert_eq!(v["forms"].as_array().unwrap().len(), 6);
        assert_eq!(v["summands"].as_array().unwrap().len(), 3);
    }

    #[test]
    fn binary_functors_take_two_groups() {
        let v = parse(&functor_json("tor", "Z/4; Z/6"));
        assert_eq!(v["group"]["text"], "Z/2");
        assert_eq!(v["method"], "closed_form");
    }
}
