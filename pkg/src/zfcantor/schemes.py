"""Shortcuts, well-formed abbreviation schemes, and forward expansion.

A shortcut defines a predicate by a formula body in which no set
variable occurs free and whose new variables all come from the formal
parameter list.  A scheme is an ordered list of shortcuts; it is well
formed when every body only refers to earlier predicates and the sets
of set-variable indices used by the bodies are strictly increasing
(strict mode) or at least pairwise disjoint (relaxed mode).

Forward expansion rewrites each body into a predicate-free formula by
splicing in the already-expanded bodies of the referenced predicates,
with formal parameters renamed to the actual arguments.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .formulas import (
    Exists,
    Forall,
    Formula,
    Word,
    free_variables,
    occurrences,
    parse,
    predicate_atoms,
    render,
    subformulas,
    tokenize,
)
from .substitution import sub1, sub2
from .symbols import PredicateSignature, Symbol, SymbolKind, new_var

INDEXED_PARAMS = tuple(new_var(f"y{i}") for i in range(1, 10))
LETTER_PARAMS = (new_var("x"), new_var("y"), new_var("z"))


class SchemeError(ValueError):
    pass


class BadParameterList(SchemeError):
    pass


class FreeSetVariable(SchemeError):
    pass


class ForeignNewVariable(SchemeError):
    pass


class CircularReference(SchemeError):
    pass


class VariableClash(SchemeError):
    pass


class UncoveredParameter(SchemeError):
    pass


class SubstitutabilityViolation(SchemeError):
    """Internal consistency failure: an expansion would capture a variable."""


@dataclass(frozen=True)
class Shortcut:
    """A predicate definition: name, formal parameters, and a body formula."""

    name: str
    params: tuple[Symbol, ...]
    body: Formula

    def __post_init__(self):
        PredicateSignature(self.name, len(self.params))

    @property
    def arity(self) -> int:
        return len(self.params)

    @property
    def signature(self) -> PredicateSignature:
        return PredicateSignature(self.name, self.arity)


@dataclass
class Scheme:
    """A validated scheme with its reference and variable-index metadata.

    ``r_sets[i]`` holds the 1-based indices of the predicates referenced
    by shortcut i+1; ``v_sets[i]`` holds the indices of the set
    variables appearing in its body.  Treated as immutable once built.
    """

    shortcuts: tuple[Shortcut, ...]
    r_sets: tuple[frozenset[int], ...]
    v_sets: tuple[frozenset[int], ...]
    mode: str = "strict"
    _expansions: tuple[Formula, ...] | None = field(default=None, repr=False, compare=False)

    def index_of(self, name: str) -> int:
        for i, sc in enumerate(self.shortcuts, start=1):
            if sc.name == name:
                return i
        raise KeyError(name)

    @property
    def signatures(self) -> tuple[PredicateSignature, ...]:
        return tuple(sc.signature for sc in self.shortcuts)


def _check_params(sc: Shortcut) -> None:
    k = sc.arity
    if len(set(sc.params)) != k:
        raise BadParameterList(f"{sc.name}: parameters must be distinct")
    if any(p.kind is not SymbolKind.NEW_VAR for p in sc.params):
        raise BadParameterList(f"{sc.name}: parameters must be new variables")
    if sc.params == INDEXED_PARAMS[:k]:
        return
    if k <= 3 and sc.params == LETTER_PARAMS[:k]:
        return
    raise BadParameterList(
        f"{sc.name}: parameters must be ?y1..?y{k}" + (" or ?x ?y ?z" if k <= 3 else "")
    )


def _set_var_indices(body: Formula) -> frozenset[int]:
    return frozenset(
        occ.variable.index for occ in occurrences(body) if occ.variable.kind is SymbolKind.SET_VAR
    )


def _binder_indices(body: Formula) -> frozenset[int]:
    return frozenset(
        node.var.index for node in subformulas(body) if isinstance(node, (Exists, Forall))
    )


def _precedes(a: frozenset[int], b: frozenset[int]) -> bool:
    # A < B: every element of A below every element of B; holds vacuously.
    return not a or not b or max(a) < min(b)


def validate_scheme(shortcuts, mode: str = "strict") -> Scheme:
    """Check shortcut invariants and the scheme ordering conditions.

    Computes the reference sets and variable-index sets of every body
    and verifies acyclicity of the references plus the strict ordering
    (or relaxed disjointness) of the variable-index sets.
    """
    if mode not in ("strict", "relaxed"):
        raise ValueError(f"mode must be 'strict' or 'relaxed', got {mode!r}")
    shortcuts = tuple(shortcuts)
    names = [sc.name for sc in shortcuts]
    if len(set(names)) != len(names):
        raise SchemeError("shortcut names must be distinct")
    index = {name: i for i, name in enumerate(names, start=1)}
    arity = {sc.name: sc.arity for sc in shortcuts}

    r_sets: list[frozenset[int]] = []
    v_sets: list[frozenset[int]] = []
    for i, sc in enumerate(shortcuts, start=1):
        _check_params(sc)
        for var in free_variables(sc.body):
            if var.kind is SymbolKind.SET_VAR:
                raise FreeSetVariable(f"{sc.name}: set variable {var.token} occurs free in the body")
        params = set(sc.params)
        for occ in occurrences(sc.body):
            if occ.variable.kind is SymbolKind.NEW_VAR and occ.variable not in params:
                raise ForeignNewVariable(
                    f"{sc.name}: new variable {occ.variable.token} is not a parameter"
                )
        refs = set()
        for atom in predicate_atoms(sc.body):
            if atom.name not in index:
                raise SchemeError(f"{sc.name}: unknown predicate {atom.name} in the body")
            if len(atom.args) != arity[atom.name]:
                raise SchemeError(
                    f"{sc.name}: {atom.name} has arity {arity[atom.name]},"
                    f" applied to {len(atom.args)} arguments"
                )
            refs.add(index[atom.name])
        bad = [k for k in refs if k >= i]
        if bad:
            raise CircularReference(
                f"{sc.name} (position {i}) refers to {shortcuts[bad[0] - 1].name}"
                f" (position {bad[0]}); only earlier predicates are allowed"
            )
        r_sets.append(frozenset(refs))
        v_sets.append(_set_var_indices(sc.body))

    for i in range(len(shortcuts)):
        for j in range(i + 1, len(shortcuts)):
            if mode == "strict":
                ok = _precedes(v_sets[i], v_sets[j])
            else:
                ok = not (v_sets[i] & v_sets[j])
            if not ok:
                raise VariableClash(
                    f"set-variable index sets of {names[i]} and {names[j]} violate"
                    f" the {mode} ordering: {sorted(v_sets[i])} vs {sorted(v_sets[j])}"
                )

    return Scheme(shortcuts, tuple(r_sets), tuple(v_sets), mode)


def expand(scheme: Scheme) -> list[Formula]:
    """Forward expansion of every shortcut into a predicate-free formula.

    The first body is its own expansion.  Each later body has every
    predicate atom replaced, in place, by the referenced expansion with
    its parameters renamed to the atom's arguments.  Results are cached
    on the scheme.
    """
    if scheme._expansions is None:
        sigs = {sc.name: sc.arity for sc in scheme.shortcuts}
        words: list[Word] = []
        for sc in scheme.shortcuts:
            body_word = render(sc.body)
            body_tree = parse(body_word, sigs)
            host_binders = _binder_indices(body_tree)
            patches = []
            for atom in predicate_atoms(body_tree):
                k = scheme.index_of(atom.name)
                source = scheme.shortcuts[k - 1]
                inserted = sub1(words[k - 1], dict(zip(source.params, atom.args)))
                _check_substitutable(sc.name, inserted, host_binders, atom.args)
                patches.append((inserted, atom.span[0], atom.span[1]))
            word = sub2(body_word, patches) if patches else body_word
            if any(sym.kind is SymbolKind.PREDICATE for sym in word):
                raise SubstitutabilityViolation(f"{sc.name}: expansion still contains a predicate")
            words.append(word)
        scheme._expansions = tuple(parse(w) for w in words)
    return list(scheme._expansions)


def _check_substitutable(name, inserted: Word, host_binders, args) -> None:
    inserted_binders = frozenset(
        inserted[i + 1].index
        for i, sym in enumerate(inserted)
        if sym.kind in (SymbolKind.EXISTS, SymbolKind.FORALL)
    )
    if inserted_binders & host_binders:
        raise SubstitutabilityViolation(
            f"{name}: inserted expansion quantifies {sorted(inserted_binders & host_binders)}"
            " which the host body also quantifies"
        )
    for arg in args:
        if arg.kind is SymbolKind.SET_VAR and arg.index in inserted_binders:
            raise SubstitutabilityViolation(
                f"{name}: argument {arg.token} would be captured inside the inserted expansion"
            )


def instantiate(expansion: Formula, assignment) -> Formula:
    """Rename the free new variables of an expansion to other variables.

    ``assignment`` maps parameter symbols to variable symbols and must
    cover every free new variable; length is preserved.
    """
    table = dict(assignment)
    for target in table.values():
        if not target.is_variable:
            raise SchemeError(f"instantiation target {target!r} is not a variable")
    free = {v for v in free_variables(expansion) if v.kind is SymbolKind.NEW_VAR}
    missing = free - set(table)
    if missing:
        names = ", ".join(sorted(v.token for v in missing))
        raise UncoveredParameter(f"assignment does not cover {names}")
    return parse(sub1(render(expansion), table))


# ---------------------------------------------------------------------------
# Scheme files: one shortcut per line, `NAME ( ?x ; ?y ) := <body>`,
# ordered as in the file; `#` begins a comment line.


def parse_scheme_text(text: str, mode: str = "strict") -> Scheme:
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if ":=" not in line:
            raise SchemeError(f"line {lineno}: expected `NAME ( params ) := body`")
        head, body_text = line.split(":=", 1)
        lines.append((lineno, head.strip(), body_text.strip()))

    headers = [(lineno, _parse_header(lineno, head)) for lineno, head, _ in lines]
    sigs = {}
    for _, (name, params) in headers:
        if name in sigs:
            raise SchemeError(f"duplicate shortcut name {name}")
        sigs[name] = len(params)

    shortcuts = []
    for (lineno, (name, params)), (_, _, body_text) in zip(headers, lines):
        try:
            body = parse(tokenize(body_text), sigs)
        except ValueError as exc:
            raise SchemeError(f"line {lineno}: {exc}") from exc
        shortcuts.append(Shortcut(name, params, body))
    return validate_scheme(shortcuts, mode)


def _parse_header(lineno: int, head: str) -> tuple[str, tuple[Symbol, ...]]:
    word = tokenize(head)
    if (
        len(word) < 4
        or word[0].kind is not SymbolKind.PREDICATE
        or word[1].kind is not SymbolKind.LPAREN
        or word[-1].kind is not SymbolKind.RPAREN
    ):
        raise SchemeError(f"line {lineno}: malformed shortcut header {head!r}")
    params = []
    expect_var = True
    for sym in word[2:-1]:
        if expect_var:
            if sym.kind is not SymbolKind.NEW_VAR:
                raise SchemeError(f"line {lineno}: parameter {sym.token!r} is not a new variable")
            params.append(sym)
        elif sym.kind is not SymbolKind.SEMICOLON:
            raise SchemeError(f"line {lineno}: expected ';' between parameters")
        expect_var = not expect_var
    if expect_var:
        raise SchemeError(f"line {lineno}: trailing ';' in the parameter list")
    return word[0].name, tuple(params)
