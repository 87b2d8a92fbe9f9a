import pytest

from zfcantor.cantor import builtin_scheme, emit_expansions
from zfcantor.formulas import free_variables, occurrences, parse_text, render, render_text
from zfcantor.schemes import (
    BadParameterList,
    CircularReference,
    ForeignNewVariable,
    FreeSetVariable,
    Scheme,
    Shortcut,
    SubstitutabilityViolation,
    UncoveredParameter,
    VariableClash,
    expand,
    instantiate,
    parse_scheme_text,
    validate_scheme,
)
from zfcantor.symbols import SymbolKind, new_var, set_var

X, Y, Z = new_var("x"), new_var("y"), new_var("z")


def shortcut(name, params, body_text, sigs=None):
    return Shortcut(name, params, parse_text(body_text, sigs))


class TestValidateScheme:
    def test_builtin_reference_sets(self):
        scheme = builtin_scheme()
        assert [sorted(r) for r in scheme.r_sets] == [
            [], [], [2], [], [4], [3, 5], [1, 6], [6, 7], [1, 6, 8],
        ]

    def test_builtin_variable_sets(self):
        scheme = builtin_scheme()
        assert [sorted(v) for v in scheme.v_sets] == [
            [1], [2], [3], [4], [5], [6, 7], [8, 9, 10], [11, 12, 13, 14], [15, 16, 17],
        ]

    def test_forward_reference_is_circular(self):
        sigs = {"P": 1, "Q": 1}
        first = shortcut("P", (X,), "Q ( ?x )", sigs)
        second = shortcut("Q", (X,), "( A x1 ( x1 in ?x ) )", sigs)
        with pytest.raises(CircularReference):
            validate_scheme([first, second])

    def test_self_reference_is_circular(self):
        sigs = {"P": 1}
        with pytest.raises(CircularReference):
            validate_scheme([shortcut("P", (X,), "P ( ?x )", sigs)])

    def test_shared_quantified_variable_clashes_in_both_modes(self):
        first = shortcut("P", (X,), "( A x1 ( x1 in ?x ) )")
        second = shortcut("Q", (X,), "( E x1 ( x1 in ?x ) )")
        for mode in ("strict", "relaxed"):
            with pytest.raises(VariableClash):
                validate_scheme([first, second], mode)

    def test_decreasing_disjoint_sets_need_relaxed_mode(self):
        first = shortcut("P", (X,), "( A x2 ( x2 in ?x ) )")
        second = shortcut("Q", (X,), "( A x1 ( x1 in ?x ) )")
        with pytest.raises(VariableClash):
            validate_scheme([first, second], "strict")
        scheme = validate_scheme([first, second], "relaxed")
        assert scheme.mode == "relaxed"

    def test_free_set_variable_rejected(self):
        with pytest.raises(FreeSetVariable):
            validate_scheme([shortcut("P", (X,), "( x1 in ?x )")])

    def test_foreign_new_variable_rejected(self):
        with pytest.raises(ForeignNewVariable):
            validate_scheme([shortcut("P", (X, Y), "( A x1 ( x1 in ?z ) )")])

    def test_parameter_styles(self):
        body = "( A x1 ( x1 in ?y1 ) )"
        validate_scheme([Shortcut("P", (new_var("y1"),), parse_text(body))])
        with pytest.raises(BadParameterList):
            validate_scheme([Shortcut("P", (Y,), parse_text("( A x1 ( x1 in ?y ) )"))])
        with pytest.raises(BadParameterList):
            mixed = (X, new_var("y2"))
            validate_scheme([Shortcut("P", mixed, parse_text("( A x1 ( x1 in ?x ) )"))])

    def test_duplicate_parameters_rejected(self):
        doubled = Shortcut("P", (X, X), parse_text("( A x1 ( x1 in ?x ) )"))
        with pytest.raises(BadParameterList):
            validate_scheme([doubled])


class TestExpand:
    def test_predicate_free_body_expands_to_itself(self):
        sc = shortcut("P", (X,), "( A x1 ( x1 in ?x ) )")
        scheme = validate_scheme([sc])
        [expansion] = expand(scheme)
        assert render(expansion) == render(sc.body)

    def test_small_scheme_by_hand(self):
        sigs = {"EMP": 1, "SING": 2}
        empty = shortcut("EMP", (X,), "( A x1 ! ( x1 in ?x ) )", sigs)
        sing = shortcut("SING", (X, Y), "( ( ?y in ?x ) & EMP ( ?y ) )", sigs)
        scheme = validate_scheme([empty, sing])
        first, second = expand(scheme)
        assert render_text(render(first)) == "( A x1 ! ( x1 in ?x ) )"
        assert render_text(render(second)) == "( ( ?y in ?x ) & ( A x1 ! ( x1 in ?y ) ) )"

    def test_expansions_are_predicate_free_and_pure(self):
        for named in emit_expansions():
            word = render(named.formula)
            assert all(sym.kind is not SymbolKind.PREDICATE for sym in word)
            for occ in occurrences(named.formula):
                if occ.variable.kind is SymbolKind.SET_VAR:
                    assert occ.bound
                else:
                    assert not occ.bound

    def test_expansion_free_variables_are_the_parameters(self):
        scheme = builtin_scheme()
        for sc, expansion in zip(scheme.shortcuts, expand(scheme)):
            free = free_variables(expansion)
            assert free <= set(sc.params)

    def test_expansion_is_deterministic(self):
        words_a = [render(t) for t in expand(builtin_scheme())]
        fresh = validate_scheme(builtin_scheme().shortcuts)
        words_b = [render(t) for t in expand(fresh)]
        assert words_a == words_b

    def test_capture_is_detected_on_malformed_metadata(self):
        # bypass validation: both bodies quantify x1, which a valid scheme forbids
        sigs = {"P": 1, "Q": 1}
        first = shortcut("P", (X,), "( A x1 ( x1 in ?x ) )", sigs)
        second = shortcut("Q", (Y,), "( E x1 P ( x1 ) )", sigs)
        bogus = Scheme(
            (first, second),
            (frozenset(), frozenset({1})),
            (frozenset({1}), frozenset({1})),
        )
        with pytest.raises(SubstitutabilityViolation):
            expand(bogus)


class TestInstantiate:
    def test_renaming_preserves_length(self):
        e1 = emit_expansions()[0].formula
        renamed = instantiate(e1, {X: new_var("a"), Y: new_var("b")})
        assert len(render(renamed)) == 17
        assert free_variables(renamed) == {new_var("a"), new_var("b")}

    def test_surjection_expansion_instantiates_to_sentence_body(self):
        e9 = emit_expansions()[8].formula
        inst = instantiate(e9, {X: set_var(19), Y: set_var(18)})
        assert len(render(inst)) == 485
        free = free_variables(inst)
        assert free == {set_var(18), set_var(19)}

    def test_uncovered_parameter(self):
        e6 = emit_expansions()[5].formula
        with pytest.raises(UncoveredParameter):
            instantiate(e6, {X: set_var(1)})

    def test_extra_assignments_are_harmless(self):
        e1 = emit_expansions()[0].formula
        out = instantiate(e1, {X: set_var(18), Y: set_var(19), Z: set_var(20)})
        assert len(render(out)) == 17


SCHEME_FILE = """\
# a tiny scheme
EMP ( ?x ) := ( A x1 ! ( x1 in ?x ) )
SING ( ?x ; ?y ) := ( ( ?y in ?x ) & EMP ( ?y ) )
"""


class TestSchemeFiles:
    def test_parse_and_expand(self):
        scheme = parse_scheme_text(SCHEME_FILE)
        assert [sc.name for sc in scheme.shortcuts] == ["EMP", "SING"]
        assert [sorted(r) for r in scheme.r_sets] == [[], [1]]
        first, second = expand(scheme)
        assert render_text(render(second)) == "( ( ?y in ?x ) & ( A x1 ! ( x1 in ?y ) ) )"

    def test_file_order_is_scheme_order(self):
        backwards = "\n".join(reversed(SCHEME_FILE.strip().splitlines()[1:]))
        with pytest.raises(CircularReference):
            parse_scheme_text(backwards)

    def test_malformed_lines_rejected(self):
        from zfcantor.schemes import SchemeError

        with pytest.raises(SchemeError):
            parse_scheme_text("EMP ( ?x ) ( A x1 ( x1 in ?x ) )")
        with pytest.raises(SchemeError):
            parse_scheme_text("EMP ( x1 ) := ( A x1 ( x1 in ?x ) )")

    def test_roundtrip_of_builtin_scheme_as_text(self):
        lines = []
        for sc in builtin_scheme().shortcuts:
            params = " ; ".join(p.token for p in sc.params)
            lines.append(f"{sc.name} ( {params} ) := {render_text(render(sc.body))}")
        reparsed = parse_scheme_text("\n".join(lines))
        assert [render(t) for t in expand(reparsed)] == [
            render(t) for t in expand(builtin_scheme())
        ]
