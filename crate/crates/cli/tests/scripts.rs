use proptest::prelude::*;

use formchase_cli::script::{GroupSpec, RingSpec, Statement, Stmt, SubArg, Theorem};
use formchase_cli::{execute_script, parse_script, pretty, Format, Options, Script};
use formchase_core::Dir;

fn run(text: &str) -> (i32, String) {
    let script = parse_script(text).unwrap();
    let ex = execute_script(&script, &Options::default());
    (ex.exit_code(), ex.render(Format::Text))
}

const PARITY: &str = "\
group Z4 cyclic 4
group Z2 cyclic 2
hom f : Z4 -> Z2 map 0 1 0 1
zigzag Z = f bwd
induce Z
";

#[test]
fn backward_parity_is_not_inducible() {
    let (code, out) = run(PARITY);
    assert_eq!(code, 1);
    assert!(out.contains("  FAIL not-inducible: forward chase of 1 = {0,2}\n"), "{out}");
}

#[test]
fn diamond_chase_ends_at_the_bottom() {
    let text = "\
group S3 symmetric 3
group Z2 cyclic 2
hom p : Z2 -> Z2 map 0 1
hom i : Z2 -> S3 map 0 1
hom j : S3 -> S3 map 0 1 2 3 4 5
hom q : S3 -> Z2 map 0 1 1 1 0 0
sub A of Z2 = {0}
zigzag D = p bwd, i fwd, j bwd, q fwd
chase D fwd A
";
    let (code, out) = run(text);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "line 9: chase D fwd A");
    assert_eq!(lines.len(), 1 + 5 + 1);
    assert_eq!(lines[5], "  Z2 {0}");
    assert_eq!(lines[6], "  OK");
}

#[test]
fn empty_script_is_silent() {
    for text in ["", "# nothing\n\n", "group Z2 cyclic 2\n"] {
        let (code, out) = run(text);
        assert_eq!((code, out.as_str()), (0, ""));
    }
}

#[test]
fn json_emits_one_record_per_command() {
    let ex = execute_script(&parse_script(PARITY).unwrap(), &Options::default());
    let out = ex.render(Format::Json);
    let records: Vec<serde_json::Value> = out.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(records.len(), 1);
    assert_eq!(records[0]["line"], 5);
    assert_eq!(records[0]["ok"], false);
}

#[test]
fn validation_errors_carry_the_line() {
    let text = "group Z4 cyclic 4\ngroup Z2 cyclic 2\nhom g : Z4 -> Z2 map 0 1 1 0\nzigzag Z = g fwd\ninduce Z\n";
    let (code, out) = run(text);
    assert_eq!(code, 1);
    assert!(out.starts_with("line 3: hom g"), "{out}");
    assert!(out.contains("FAIL not-a-homomorphism"), "{out}");
}

#[test]
fn fail_fast_stops_at_the_first_failure() {
    let text = format!("{PARITY}induce Z\n");
    let script = parse_script(&text).unwrap();
    let all = execute_script(&script, &Options::default());
    let fast = execute_script(&script, &Options { fail_fast: true, ..Options::default() });
    assert_eq!(all.records.len(), 2);
    assert_eq!(fast.records.len(), 1);
}

#[test]
fn text_output_is_deterministic() {
    let text =
        std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/../../docs/examples/theorems.fc")).unwrap();
    assert_eq!(run(&text), run(&text));
}

// Generated scripts: declarations with unique names followed by commands that
// only mention declared names.

fn sub_arg(subs: usize) -> impl Strategy<Value = SubArg> {
    let named = if subs == 0 { 0 } else { 2 };
    prop_oneof![
        1 => Just(SubArg::Top),
        1 => Just(SubArg::Bottom),
        2 => prop::collection::vec(0..12usize, 0..4).prop_map(SubArg::Literal),
        named => (0..subs.max(1)).prop_map(|i| SubArg::Name(format!("s{i}"))),
    ]
}

fn table() -> impl Strategy<Value = Vec<Vec<usize>>> {
    (1..4usize).prop_flat_map(|n| prop::collection::vec(prop::collection::vec(0..n, n), n))
}

fn group_spec() -> impl Strategy<Value = GroupSpec> {
    prop_oneof![
        (1..9usize).prop_map(GroupSpec::Cyclic),
        (2..6usize).prop_map(GroupSpec::Dihedral),
        (1..4usize).prop_map(GroupSpec::Symmetric),
        Just(GroupSpec::Klein),
        Just(GroupSpec::Quaternion),
        table().prop_map(GroupSpec::Table),
    ]
}

fn ring_spec() -> impl Strategy<Value = RingSpec> {
    prop_oneof![
        Just(RingSpec::Zero),
        (1..7usize).prop_map(RingSpec::Cyclic),
        (table(), any::<usize>()).prop_map(|(add, one)| {
            let n = add.len();
            RingSpec::Table { mul: add.iter().rev().cloned().collect(), one: one % n, add }
        }),
    ]
}

fn command(objects: usize, homs: usize, subs: usize, zigzags: usize, scopes: usize) -> BoxedStrategy<Stmt> {
    let obj = move || (0..objects).prop_map(|i| format!("g{i}"));
    let zig = move || (0..zigzags.max(1)).prop_map(|i| format!("z{i}"));
    let dir = || prop_oneof![Just(Dir::Fwd), Just(Dir::Bwd)];
    let s = move || sub_arg(subs);
    let scope = (0..scopes + 2).prop_map(move |i| match i {
        0 => "grp".to_string(),
        1 => "ring".to_string(),
        k => format!("c{}", k - 2),
    });
    let mut options: Vec<BoxedStrategy<Stmt>> = vec![
        scope.prop_map(|scope| Stmt::VerifyAxioms { scope }).boxed(),
        any::<bool>().prop_map(Stmt::Dualize).boxed(),
        (obj(), s(), s()).prop_map(|(object, a, b)| Stmt::Verify(Theorem::Diamond { object, a, b })).boxed(),
        (obj(), s(), s()).prop_map(|(object, n, s)| Stmt::Verify(Theorem::DoubleQuotient { object, n, s })).boxed(),
        (obj(), s(), s(), s(), s())
            .prop_map(|(object, s1, s, t1, t)| Stmt::Verify(Theorem::Butterfly { object, s1, s, t1, t }))
            .boxed(),
        (obj(), s(), s(), s())
            .prop_map(|(object, x, y, z)| Stmt::Verify(Theorem::ModularLaw { object, x, y, z }))
            .boxed(),
    ];
    if homs > 0 {
        options.push(
            ((0..homs).prop_map(|i| format!("h{i}")), s(), s())
                .prop_map(|(hom, w, x)| Stmt::Verify(Theorem::ImageTheorem { hom, w, x }))
                .boxed(),
        );
    }
    if zigzags > 0 {
        options.push((zig(), dir(), s()).prop_map(|(zigzag, dir, sub)| Stmt::Chase { zigzag, dir, sub }).boxed());
        options.push(zig().prop_map(|zigzag| Stmt::Induce { zigzag }).boxed());
        options.push(zig().prop_map(|zigzag| Stmt::Oracle { zigzag }).boxed());
        options.push(zig().prop_map(|zigzag| Stmt::Pyramid { zigzag }).boxed());
    }
    prop::strategy::Union::new(options).boxed()
}

fn script() -> impl Strategy<Value = Script> {
    (1..4usize, 0..3usize, 0..3usize, 0..3usize, 0..3usize, 0..3usize)
        .prop_flat_map(|(groups, rings, homs, subs, zigzags, scopes)| {
            let objects = groups + rings;
            let obj = move || (0..objects).prop_map(|i| format!("g{i}"));
            let group_decls = prop::collection::vec(group_spec(), groups);
            let ring_decls = prop::collection::vec(ring_spec(), rings);
            let hom_decls = prop::collection::vec((obj(), obj(), prop::collection::vec(0..8usize, 0..6)), homs);
            let sub_decls = prop::collection::vec((obj(), prop::collection::vec(0..8usize, 0..4)), subs);
            let hom_name = move || (0..homs.max(1)).prop_map(|i| format!("h{i}"));
            let steps = prop::collection::vec((hom_name(), prop_oneof![Just(Dir::Fwd), Just(Dir::Bwd)]), 1..4);
            let zig_decls = prop::collection::vec(steps, if homs == 0 { 0 } else { zigzags });
            let scope_decls = prop::collection::vec(
                (
                    prop::collection::vec(obj(), 1..3),
                    prop::option::of(prop::collection::vec(hom_name(), 1..3)).prop_map(move |h| h.filter(|_| homs > 0)),
                    prop::option::of(0..3usize),
                ),
                scopes,
            );
            let zigzags = if homs == 0 { 0 } else { zigzags };
            let commands = prop::collection::vec(command(objects, homs, subs, zigzags, scopes), 0..8);
            (group_decls, ring_decls, hom_decls, sub_decls, zig_decls, scope_decls, commands)
        })
        .prop_map(|(groups, rings, homs, subs, zigzags, scopes, commands)| {
            let mut stmts = Vec::new();
            let ng = groups.len();
            for (i, spec) in groups.into_iter().enumerate() {
                stmts.push(Stmt::Group { name: format!("g{i}"), spec });
            }
            for (i, spec) in rings.into_iter().enumerate() {
                stmts.push(Stmt::Ring { name: format!("g{}", ng + i), spec });
            }
            for (i, (dom, cod, map)) in homs.into_iter().enumerate() {
                stmts.push(Stmt::Hom { name: format!("h{i}"), dom, cod, map });
            }
            for (i, (parent, elems)) in subs.into_iter().enumerate() {
                stmts.push(Stmt::Sub { name: format!("s{i}"), parent, elems });
            }
            for (i, steps) in zigzags.into_iter().enumerate() {
                stmts.push(Stmt::Zigzag { name: format!("z{i}"), steps });
            }
            for (i, (objects, homs, depth)) in scopes.into_iter().enumerate() {
                stmts.push(Stmt::Scope { name: format!("c{i}"), objects, homs, depth });
            }
            stmts.extend(commands);
            Script { statements: stmts.into_iter().map(|stmt| Statement { line: 0, column: 0, stmt }).collect() }
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn pretty_printing_round_trips(s in script()) {
        let text = pretty(&s);
        let parsed = parse_script(&text).map_err(|e| TestCaseError::fail(format!("{e}\n{text}")))?;
        prop_assert_eq!(&parsed, &s);
        prop_assert_eq!(pretty(&parsed), text);
    }
}

#[test]
fn worked_examples_round_trip() {
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/../../docs/examples");
    for entry in std::fs::read_dir(dir).unwrap() {
        let path = entry.unwrap().path();
        if path.extension().is_some_and(|e| e == "fc") {
            let s = parse_script(&std::fs::read_to_string(&path).unwrap()).unwrap();
            assert_eq!(parse_script(&pretty(&s)).unwrap(), s, "{}", path.display());
        }
    }
}
