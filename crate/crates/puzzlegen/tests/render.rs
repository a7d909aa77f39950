use puzzlegen::svg::hex_colour;
use puzzlegen::{render_svg, RenderSpec};
use puzzlegen_core::{GenContext, Payload, PuzzleInstance, PuzzleKind};

fn instances() -> Vec<PuzzleInstance> {
    let ctx = GenContext::new().unwrap();
    PuzzleKind::ALL
        .iter()
        .flat_map(|&k| (0..3).map(move |i| (k, i)))
        .map(|(k, i)| PuzzleInstance::generate(91, k, i, &ctx).unwrap())
        .collect()
}

/// Tag names in document order; panics on unbalanced tags.
fn element_stack(svg: &str) -> Vec<String> {
    let mut open: Vec<String> = Vec::new();
    let mut roots = Vec::new();
    let mut rest = svg;
    while let Some(start) = rest.find('<') {
        let end = rest[start..].find('>').expect("unterminated tag") + start;
        let tag = &rest[start + 1..end];
        rest = &rest[end + 1..];
        if tag.starts_with('?') || tag.starts_with('!') {
            continue;
        }
        if let Some(name) = tag.strip_prefix('/') {
            assert_eq!(open.pop().as_deref(), Some(name.trim()), "mismatched close");
            continue;
        }
        let name = tag
            .split_whitespace()
            .next()
            .unwrap()
            .trim_end_matches('/')
            .to_string();
        if open.is_empty() {
            roots.push(name.clone());
        }
        if !tag.ends_with('/') {
            open.push(name);
        }
    }
    assert!(open.is_empty(), "unclosed {open:?}");
    roots
}

#[test]
fn every_kind_renders_one_balanced_svg_root() {
    for inst in instances() {
        let svg = render_svg(&inst, &RenderSpec::default());
        assert!(svg.starts_with("<?xml"), "{}", inst.id);
        assert_eq!(element_stack(&svg), ["svg"], "{}", inst.id);
        assert!(svg.contains("viewBox=\"0 0 640 640\""));
        assert!(!svg.contains("NaN") && !svg.contains("inf"), "{}", inst.id);
    }
}

#[test]
fn rendering_is_deterministic() {
    let spec = RenderSpec::default();
    for (a, b) in instances().iter().zip(instances().iter()) {
        assert_eq!(render_svg(a, &spec), render_svg(b, &spec));
    }
}

#[test]
fn canvas_size_follows_the_render_settings() {
    let inst = &instances()[0];
    let spec = RenderSpec {
        width: 300,
        height: 200,
        ..RenderSpec::default()
    };
    assert!(render_svg(inst, &spec).contains("viewBox=\"0 0 300 200\""));
}

#[test]
fn hue_tiles_use_exact_colours() {
    for inst in instances() {
        let Payload::ColourHue(board) = &inst.payload else {
            continue;
        };
        let svg = render_svg(&inst, &RenderSpec::default());
        for rgb in board.ideal.iter() {
            let fill = format!("fill=\"{}\"", hex_colour(*rgb));
            // Once in the shuffled panel, once in the ideal panel.
            assert!(
                svg.matches(&fill).count() >= 2,
                "{} missing {fill}",
                inst.id
            );
        }
    }
}

#[test]
fn maze_arrows_are_green_and_blue() {
    let palette = RenderSpec::default().palette;
    for inst in instances() {
        if inst.kind != PuzzleKind::Maze {
            continue;
        }
        let svg = render_svg(&inst, &RenderSpec::default());
        assert!(svg.contains(&palette.entry_arrow) && svg.contains(&palette.exit_arrow));
    }
}
