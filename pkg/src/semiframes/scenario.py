"""Line-oriented scenario files.

A scenario has four sections, each opened by its name on a line of its own::

    SPACES
    ladder = 8,16,32,64,128
    seed = 0

    SEQUENCES
    f = weighted weight=n
    h = image f L

    OPERATORS
    L = diagonal 1/n
    M = block [[1,1],[0,0]] tail=1

    TASKS
    classify f
    direct-sum f h
    check-prop Prop-3.3 f=f L=L

Declarations are ``name = kind args...`` and tasks are ``kind args...``.
Arguments are positional or ``key=value`` and are split like a shell line,
so formulas containing spaces must be quoted.  ``#`` starts a comment.

:func:`parse_scenario` returns a :class:`Scenario` whose declarations are
stored in canonical form; :func:`format_scenario` prints that form and
``parse_scenario(format_scenario(s)) == s``.  All problems found while
parsing are collected into one :class:`ScenarioError` carrying
``(line, message)`` diagnostics.
"""

import ast
import shlex
from dataclasses import dataclass, field

from .errors import ScenarioError, UnknownProposition
from .formulas import parse_formula
from .ladder import Settings, TruncationLadder
from . import operators as ops
from . import sequences as seqs

SECTIONS = ("SPACES", "SEQUENCES", "OPERATORS", "TASKS")
EXAMPLES = ("example-3.4", "example-3.8", "example-5.7")


# -- argument types -------------------------------------------------------

def _formula(var):
    def conv(text):
        return parse_formula(text, var).text
    return conv


def _matrix(text):
    try:
        value = ast.literal_eval(text)
    except (ValueError, SyntaxError) as exc:
        raise ValueError(f"cannot read matrix {text!r}") from exc
    rows = [[complex(x) for x in row] for row in value]
    if not rows or any(len(r) != len(rows[0]) for r in rows):
        raise ValueError("matrix rows must be nonempty and of equal length")
    return "[" + ",".join("[" + ",".join(_num(x) for x in r) + "]" for r in rows) + "]"


def _num(z):
    if z.imag == 0:
        return repr(z.real)
    return repr(z).strip("()")


def _bool(text):
    if text.lower() in ("true", "yes", "1"):
        return "true"
    if text.lower() in ("false", "no", "0"):
        return "false"
    raise ValueError(f"expected true/false, got {text!r}")


def _int(text):
    v = int(text)
    if v < 0:
        raise ValueError("expected a nonnegative integer")
    return str(v)


def _word(text):
    return text


FORMULA_N, FORMULA_D = _formula("n"), _formula("d")


@dataclass(frozen=True)
class Signature:
    positional: tuple = ()
    keywords: tuple = ()
    required: tuple = ()


# (argument name, type) where type is a converter or one of "seq", "op"
OPERATOR_KINDS = {
    "identity": Signature(),
    "diagonal": Signature((("weight", FORMULA_N),)),
    "perm": Signature(keywords=(("index", FORMULA_N), ("weight", FORMULA_N)),
                      required=("index", "weight")),
    "block": Signature((("matrix", _matrix),), (("tail", FORMULA_N),)),
    "sum": Signature((("left", "op"), ("right", "op"))),
    "adjoint": Signature((("op", "op"),)),
    "compose": Signature((("left", "op"), ("right", "op"))),
    "identity-plus": Signature((("op", "op"),)),
}

SEQUENCE_KINDS = {
    "weighted": Signature(keywords=(("weight", FORMULA_N), ("index", FORMULA_N),
                                    ("dim", FORMULA_D)), required=("weight",)),
    "explicit": Signature((("vectors", _matrix),)),
    "image": Signature((("base", "seq"), ("op", "op"))),
    "identity-plus": Signature((("base", "seq"), ("op", "op"))),
    "operator-sum": Signature((("base", "seq"), ("op", "op"), ("second", "op"))),
    "sum": Signature((("left", "seq"), ("right", "seq"))),
    "direct": Signature((("left", "seq"), ("right", "seq"))),
    "internal": Signature((("left", "seq"), ("right", "seq")),
                          (("left_index", FORMULA_N), ("right_index", FORMULA_N)),
                          required=("left_index", "right_index")),
    "from-operator": Signature((("op", "op"),)),
}

TASK_KINDS = {
    "classify": Signature((("sequence", "seq"),), (("span", _bool),)),
    "transform": Signature((("mode", _word), ("sequence", "seq"), ("arg", _word)),
                           (("second", _word),)),
    "direct-sum": Signature((("left", "seq"), ("right", "seq"))),
    "check-prop": Signature((("id", _word),),
                            (("f", "seq"), ("g", "seq"), ("L", "op"), ("L2", "op"),
                             ("left_index", FORMULA_N), ("right_index", FORMULA_N))),
    "reproduce-paper": Signature((("example", _word),)),
    "suite": Signature(keywords=(("builtin", _bool), ("random", _int), ("stress", _bool),
                                 ("counterexamples", _bool), ("props", _word))),
}

TRANSFORM_MODES = {"image": "op", "identity-plus": "op", "operator-sum": "op",
                   "family-sum": "seq"}


@dataclass(frozen=True)
class Decl:
    """One declaration or task in canonical form; ``args`` is ``((key, text), ...)``."""

    name: str
    kind: str
    args: tuple
    line: int = field(default=0, compare=False)

    def get(self, key, default=None):
        return dict(self.args).get(key, default)


@dataclass(frozen=True)
class Scenario:
    ladder: TruncationLadder = TruncationLadder()
    seed: int = 0
    tol_abs: float = None
    sequences: tuple = ()
    operators: tuple = ()
    tasks: tuple = ()

    @property
    def settings(self):
        return Settings(tol_abs=self.tol_abs)

    def sequence(self, name):
        return _resolve(self, "seq", name)

    def operator(self, name):
        return _resolve(self, "op", name)

    def with_options(self, ladder=None, seed=None, tol_abs=None):
        return Scenario(ladder if ladder is not None else self.ladder,
                        self.seed if seed is None else seed,
                        self.tol_abs if tol_abs is None else tol_abs,
                        self.sequences, self.operators, self.tasks)


# -- parsing --------------------------------------------------------------

def _split(text):
    return shlex.split(text, comments=True, posix=True)


def _bind_args(kind, sig, tokens):
    """Map tokens onto ``sig``; returns canonical ``((key, value), ...)``."""
    pos = [t for t in tokens if "=" not in t or t.startswith("[")]
    kw = [t for t in tokens if "=" in t and not t.startswith("[")]
    if len(pos) > len(sig.positional):
        raise ValueError(f"{kind} takes {len(sig.positional)} positional argument(s), "
                         f"got {len(pos)}")
    if len(pos) < len(sig.positional):
        missing = [n for n, _ in sig.positional[len(pos):]]
        raise ValueError(f"{kind} is missing {', '.join(missing)}")
    types = dict(sig.keywords)
    values = {}
    for (name, conv), tok in zip(sig.positional, pos):
        values[name] = (conv, tok)
    for tok in kw:
        key, _, val = tok.partition("=")
        if key not in types:
            raise ValueError(f"{kind} has no option {key!r}")
        if key in values:
            raise ValueError(f"option {key!r} given twice")
        values[key] = (types[key], val)
    for key in sig.required:
        if key not in values:
            raise ValueError(f"{kind} needs {key}=...")
    order = [n for n, _ in sig.positional] + [n for n, _ in sig.keywords]
    out = []
    for key in order:
        if key in values:
            conv, raw = values[key]
            out.append((key, raw if isinstance(conv, str) else conv(raw)))
    return tuple(out)


def _refs(sig):
    return {n: t for n, t in sig.positional + sig.keywords if isinstance(t, str)}


def _task_refs(decl):
    refs = _refs(TASK_KINDS[decl.kind])
    if decl.kind == "transform":
        mode = decl.get("mode")
        kind = TRANSFORM_MODES.get(mode)
        if kind is None:
            raise ValueError(f"unknown transform mode {mode!r}; expected one of "
                             + ", ".join(TRANSFORM_MODES))
        refs = {"sequence": "seq", "arg": kind}
        has_second = "second" in dict(decl.args)
        if mode == "operator-sum":
            if not has_second:
                raise ValueError("transform operator-sum needs second=")
            refs["second"] = "op"
        elif has_second:
            raise ValueError(f"transform {mode} takes no second=")
    return refs


def parse_declaration(text, table, line=0):
    """Parse ``name = kind args`` (or ``kind args`` for tasks when ``table`` is TASK_KINDS)."""
    name = ""
    if table is not TASK_KINDS:
        head, eq, rest = text.partition("=")
        name = head.strip()
        if not eq or not name.isidentifier():
            raise ValueError("expected 'name = kind arguments'")
        text = rest
    tokens = _split(text)
    if not tokens:
        raise ValueError("missing kind")
    kind = tokens[0]
    if kind not in table:
        raise ValueError(f"unknown kind {kind!r}; expected one of {', '.join(table)}")
    return Decl(name, kind, _bind_args(kind, table[kind], tokens[1:]), line)


def _spaces_line(text, state):
    key, eq, val = text.partition("=")
    key, val = key.strip(), val.split("#", 1)[0].strip()
    if not eq:
        raise ValueError("expected 'key = value'")
    if key == "ladder":
        state["ladder"] = TruncationLadder.parse(val)
    elif key == "seed":
        state["seed"] = int(_int(val))
    elif key == "tol_abs":
        v = float(val)
        if not v > 0:
            raise ValueError("tol_abs must be positive")
        state["tol_abs"] = v
    else:
        raise ValueError(f"unknown setting {key!r}; expected ladder, seed or tol_abs")


def parse_scenario(text):
    """Parse scenario ``text``; raises :class:`ScenarioError` with all diagnostics."""
    diags = []
    section = None
    state = {}
    decls = {"SEQUENCES": [], "OPERATORS": [], "TASKS": []}
    tables = {"SEQUENCES": SEQUENCE_KINDS, "OPERATORS": OPERATOR_KINDS, "TASKS": TASK_KINDS}
    for lineno, raw in enumerate(text.splitlines(), 1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if stripped in SECTIONS:
            section = stripped
            continue
        try:
            if section is None:
                raise ValueError("content before the first section header")
            if section == "SPACES":
                _spaces_line(stripped, state)
            else:
                decls[section].append(parse_declaration(stripped, tables[section], lineno))
        except ValueError as exc:
            diags.append((lineno, str(exc)))

    scenario = Scenario(state.get("ladder", TruncationLadder()), state.get("seed", 0),
                        state.get("tol_abs"), tuple(decls["SEQUENCES"]),
                        tuple(decls["OPERATORS"]), tuple(decls["TASKS"]))
    diags += check_scenario(scenario)
    if diags:
        raise ScenarioError(sorted(diags))
    return scenario


def check_scenario(scenario):
    """Name resolution and typing diagnostics for an assembled scenario."""
    diags = []
    names = {}
    for kind, group in (("seq", scenario.sequences), ("op", scenario.operators)):
        for d in group:
            if d.name in names:
                diags.append((d.line, f"name {d.name!r} defined twice"))
            names[d.name] = kind

    def ref(d, key, want):
        target = d.get(key)
        if target is None:
            return
        got = names.get(target)
        if got is None:
            what = "operator" if want == "op" else "sequence"
            diags.append((d.line, f"undefined {what} {target!r}"))
        elif got != want:
            diags.append((d.line, f"{target!r} is a {'sequence' if got == 'seq' else 'operator'}"
                                  f", expected {'a sequence' if want == 'seq' else 'an operator'}"))

    for d in scenario.sequences:
        for key, want in _refs(SEQUENCE_KINDS[d.kind]).items():
            ref(d, key, want)
    for d in scenario.operators:
        for key, want in _refs(OPERATOR_KINDS[d.kind]).items():
            ref(d, key, want)
    for d in scenario.tasks:
        try:
            refs = _task_refs(d)
        except ValueError as exc:
            diags.append((d.line, str(exc)))
            continue
        for key, want in refs.items():
            ref(d, key, want)
        if d.kind == "check-prop":
            from .propositions import expand_id
            try:
                expand_id(d.get("id"))
            except UnknownProposition:
                diags.append((d.line, f"unknown proposition {d.get('id')!r}"))
        if d.kind == "reproduce-paper" and d.get("example") not in EXAMPLES + ("all",):
            diags.append((d.line, f"unknown example {d.get('example')!r}; expected one of "
                                  + ", ".join(EXAMPLES + ("all",))))
        if d.kind == "suite" and d.get("props"):
            from .propositions import expand_id
            for pid in d.get("props").split(","):
                try:
                    expand_id(pid)
                except UnknownProposition:
                    diags.append((d.line, f"unknown proposition {pid!r}"))
    diags += _cycles(scenario)
    if not diags:
        for d in scenario.sequences + scenario.operators:
            try:
                _resolve(scenario, "seq" if d in scenario.sequences else "op", d.name)
            except (ValueError, TypeError) as exc:
                diags.append((d.line, str(exc)))
    return diags


def _cycles(scenario):
    deps = {}
    for d in scenario.sequences:
        deps[d.name] = [d.get(k) for k in _refs(SEQUENCE_KINDS[d.kind]) if d.get(k)]
    for d in scenario.operators:
        deps[d.name] = [d.get(k) for k in _refs(OPERATOR_KINDS[d.kind]) if d.get(k)]
    lines = {d.name: d.line for d in scenario.sequences + scenario.operators}
    diags, state = [], {}

    def visit(n, stack):
        if state.get(n) == 1:
            diags.append((lines[n], f"circular definition: {' -> '.join(stack + [n])}"))
            return
        if state.get(n) == 2 or n not in deps:
            return
        state[n] = 1
        for m in deps[n]:
            visit(m, stack + [n])
        state[n] = 2

    for n in deps:
        visit(n, [])
    return diags


# -- resolution -----------------------------------------------------------

def _lookup(scenario, kind, name):
    group = scenario.sequences if kind == "seq" else scenario.operators
    for d in group:
        if d.name == name:
            return d
    raise ValueError(f"undefined {'sequence' if kind == 'seq' else 'operator'} {name!r}")


def _matrix_value(text):
    return tuple(tuple(complex(x) for x in row) for row in ast.literal_eval(text))


def _resolve(scenario, kind, name):
    d = _lookup(scenario, kind, name)
    a = dict(d.args)
    op = lambda key: _resolve(scenario, "op", a[key])  # noqa: E731
    seq = lambda key: _resolve(scenario, "seq", a[key])  # noqa: E731
    if kind == "op":
        k = d.kind
        if k == "identity":
            return ops.Identity()
        if k == "diagonal":
            return ops.Diagonal(parse_formula(a["weight"]))
        if k == "perm":
            return ops.PermutationWeighted(parse_formula(a["index"]), parse_formula(a["weight"]))
        if k == "block":
            tail = parse_formula(a["tail"]) if "tail" in a else None
            return ops.Explicit(_matrix_value(a["matrix"]), tail)
        if k == "sum":
            return ops.Sum(op("left"), op("right"))
        if k == "adjoint":
            return ops.Adjoint(op("op"))
        if k == "compose":
            return ops.Compose(op("left"), op("right"))
        return ops.IdentityPlus(op("op"))
    k = d.kind
    if k == "weighted":
        return seqs.WeightedBasis(parse_formula(a["weight"]),
                                  parse_formula(a.get("index", "n")),
                                  parse_formula(a.get("dim", "d"), "d"))
    if k == "explicit":
        return seqs.Explicit(_matrix_value(a["vectors"]))
    if k == "image":
        return seqs.OperatorImage(seq("base"), op("op"))
    if k == "identity-plus":
        return seqs.OperatorImage(seq("base"), ops.IdentityPlus(op("op")))
    if k == "operator-sum":
        return seqs.OperatorImage(seq("base"), ops.Sum(op("op"), op("second")))
    if k == "sum":
        return seqs.PointwiseSum(seq("left"), seq("right"))
    if k == "direct":
        return seqs.DirectSum(seq("left"), seq("right"))
    if k == "internal":
        from .direct_sum import InternalSum
        return InternalSum(seq("left"), seq("right"), parse_formula(a["left_index"]),
                           parse_formula(a["right_index"]))
    return seqs.sequence_from_operator(op("op"))


# -- printing -------------------------------------------------------------

def _quote(text):
    return shlex.quote(text) if text else "''"


def format_args(decl, table):
    sig = table[decl.kind]
    positional = {n for n, _ in sig.positional}
    parts = [decl.kind]
    for key, val in decl.args:
        parts.append(_quote(val) if key in positional else _quote(f"{key}={val}"))
    return " ".join(parts)


def format_scenario(scenario):
    """Canonical text of ``scenario``."""
    lines = ["SPACES", f"ladder = {scenario.ladder}", f"seed = {scenario.seed}"]
    if scenario.tol_abs is not None:
        lines.append(f"tol_abs = {scenario.tol_abs!r}")
    for title, group, table in (("SEQUENCES", scenario.sequences, SEQUENCE_KINDS),
                                ("OPERATORS", scenario.operators, OPERATOR_KINDS)):
        lines += ["", title]
        lines += [f"{d.name} = {format_args(d, table)}" for d in group]
    lines += ["", "TASKS"]
    lines += [format_args(d, TASK_KINDS) for d in scenario.tasks]
    return "\n".join(lines) + "\n"


# -- built-in scenarios ---------------------------------------------------

BUILTIN = {
    "example-3.4": """\
SEQUENCES
f = weighted weight=n
u = weighted weight=1
v = weighted weight=1/n
Lf = image f L

OPERATORS
L = diagonal 1/n

TASKS
reproduce-paper example-3.4
classify f
classify Lf
classify v
check-prop Prop-3.3 f=f L=L
check-prop Prop-3.6 f=u L=L
""",
    "example-3.8": """\
SEQUENCES
f = weighted weight=n
Lf = image f L

OPERATORS
L = block [[1,1],[0,0]] tail=1

TASKS
reproduce-paper example-3.8
classify Lf span=true
check-prop Prop-3.7 f=f L=L
""",
    "example-5.7": """\
SEQUENCES
f = weighted weight='n*(1-n%2)' index=n/2 dim=d//2
g = weighted weight='n*(n%2)' index=(n+1)/2 dim=(d+1)//2

TASKS
reproduce-paper example-5.7
direct-sum f g
check-prop Prop-5.5 f=f g=g
check-prop Cor-5.6 f=f g=g left_index=2*n right_index='2*n-1'
""",
}


def builtin_scenario(name):
    if name not in BUILTIN:
        raise KeyError(f"no built-in scenario {name!r}; available: {', '.join(BUILTIN)}")
    return parse_scenario("SPACES\nladder = 8,16,32,64,128\nseed = 0\n\n" + BUILTIN[name])
