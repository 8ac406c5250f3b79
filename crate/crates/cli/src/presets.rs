//! The figure presets, shipped as scenario files.

use crate::scenario::Scenario;

const PRESETS: [(&str, &str); 6] = [
    ("fig1", include_str!("../presets/fig1.toml")),
    ("fig2", include_str!("../presets/fig2.toml")),
    ("fig4", include_str!("../presets/fig4.toml")),
    ("fig5", include_str!("../presets/fig5.toml")),
    ("fig6", include_str!("../presets/fig6.toml")),
    ("fig7", include_str!("../presets/fig7.toml")),
];

pub fn names() -> impl Iterator<Item = &'static str> {
    PRESETS.iter().map(|(n, _)| *n)
}

pub fn source(name: &str) -> Option<&'static str> {
    PRESETS.iter().find(|(n, _)| *n == name).map(|(_, s)| *s)
}

pub fn preset(name: &str) -> Option<Scenario> {
    source(name).map(|s| Scenario::from_toml(s, name).expect("shipped presets are valid"))
}

/// One line per preset: `name: description`.
pub fn list_presets() -> String {
    names()
        .map(|n| format!("{n}: {}\n", preset(n).expect("listed preset").description))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_presets_parse() {
        for n in names() {
            let s = preset(n).unwrap();
            assert_eq!(s.name, n);
            assert!(!s.checks.is_empty());
        }
        assert!(preset("fig3").is_none());
    }

    #[test]
    fn listing_carries_the_parameters() {
        let text = list_presets();
        assert_eq!(text.lines().count(), 6);
        assert!(text.contains("fig1: a=−2.01 b=−0.01 ⟨p⟩=0 free"));
        assert!(text.contains("fig4: V0=5 ⟨p⟩=1"));
        assert!(text.contains("fig6: V0=1 Gaussian ⟨x⟩=−3 ⟨p⟩=1 Δx=0.5"));
    }
}
