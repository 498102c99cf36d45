"""Structural analyses of weighted grammars: nullability, cycle-freeness,
nonexpansiveness, degree, and the parse-tree dimension bound.

Every negative classification comes with a replayable witness: an actual
derivation sequence exhibiting the offending behaviour, built from
shortest paths so that witnesses are small and deterministic.
"""

from .errors import ExpansiveGrammar
from .grammar import Grammar
from .trees import (
    DerivationSequence,
    ParseTree,
    min_yield_lengths,
    tree_size,
)


def nullable_variables(grammar):
    """Variables deriving the empty word."""
    lengths = min_yield_lengths(grammar)
    return {v for v, n in lengths.items() if n == 0}


def _eps_trees(grammar, nullable):
    """A smallest empty-yield parse tree for each nullable variable;
    ties broken by rule declaration order."""
    best = {}
    changed = True
    while changed:
        changed = False
        for ri, rule in enumerate(grammar.rules):
            if rule.lhs not in nullable:
                continue
            if any(grammar.is_terminal(s) for s in rule.rhs):
                continue
            if any(s not in best for s in rule.rhs):
                continue
            tree = ParseTree(ri, [best[s] for s in rule.rhs])
            old = best.get(rule.lhs)
            if old is None or tree_size(tree) < tree_size(old):
                best[rule.lhs] = tree
                changed = True
    return best


class _Form:
    """A sentential form as a list of cells, supporting rule application
    at a tracked cell and full collapse of nullable cells; records every
    step as (position, rule index)."""

    class Cell:
        __slots__ = ("sym",)

        def __init__(self, sym):
            self.sym = sym

    def __init__(self, sym):
        self.root = self.Cell(sym)
        self.cells = [self.root]
        self.steps = []

    def apply(self, cell, ri, rule):
        pos = self.cells.index(cell)
        self.steps.append((pos, ri))
        fresh = [self.Cell(s) for s in rule.rhs]
        self.cells[pos:pos + 1] = fresh
        return fresh

    def expand_by_tree(self, cell, tree, grammar):
        rule = grammar.rules[tree.rule]
        fresh = self.apply(cell, tree.rule, rule)
        var_cells = [c for c in fresh if grammar.is_variable(c.sym)]
        for child_cell, child in zip(var_cells, tree.children):
            self.expand_by_tree(child_cell, child, grammar)

    def derivation(self):
        return DerivationSequence((self.root.sym,), self.steps)


# --- cycle-freeness ------------------------------------------------------

class CycleWitness:
    """A cycle X1 -> ... -> X1 in the unit-derivation graph, together
    with a derivation replaying X1 =>+ X1."""

    __slots__ = ("variables", "derivation")

    def __init__(self, variables, derivation):
        self.variables = tuple(variables)
        self.derivation = derivation

    def __repr__(self):
        return "CycleWitness(%s)" % " -> ".join(self.variables)


def _cycle_edges(grammar, nullable):
    """Edges (X, Y, rule index, occurrence position): rule X -> aYb with
    a, b variable-only and fully nullable."""
    edges = {v: [] for v in grammar.variables}
    for ri, rule in enumerate(grammar.rules):
        if any(grammar.is_terminal(s) for s in rule.rhs):
            continue
        for pos, sym in enumerate(rule.rhs):
            rest = rule.rhs[:pos] + rule.rhs[pos + 1:]
            if all(s in nullable for s in rest):
                edges[rule.lhs].append((sym, ri, pos))
    return edges


def is_cycle_free(grammar):
    """(True, None) when no variable derives exactly itself; otherwise
    (False, CycleWitness) for a shortest such cycle."""
    nullable = nullable_variables(grammar)
    edges = _cycle_edges(grammar, nullable)
    best = None
    for origin in grammar.variables:
        # BFS back to the origin; parents give the hop list
        parent = {}
        queue = [origin]
        found = None
        while queue and found is None:
            nxt = []
            for u in queue:
                for v, ri, pos in edges[u]:
                    if v == origin:
                        found = (u, ri, pos)
                        break
                    if v not in parent:
                        parent[v] = (u, ri, pos)
                        nxt.append(v)
                if found is not None:
                    break
            queue = nxt
        if found is None:
            continue
        hops = [found]
        u = found[0]
        while u != origin:
            back = parent[u]
            hops.append((back[0], back[1], back[2]))
            u = back[0]
        hops.reverse()
        hops = [(ri, pos) for _, ri, pos in hops]
        if best is None or len(hops) < len(best[1]):
            best = (origin, hops)
    if best is None:
        return True, None
    origin, hops = best
    nullable_trees = _eps_trees(grammar, nullable)
    form = _Form(origin)
    target = form.root
    names = [origin]
    for ri, pos in hops:
        rule = grammar.rules[ri]
        fresh = form.apply(target, ri, rule)
        target = fresh[pos]
        names.append(target.sym)
        for cell in fresh:
            if cell is not target:
                form.expand_by_tree(cell, nullable_trees[cell.sym], grammar)
    return False, CycleWitness(names, form.derivation())


# --- nonexpansiveness ----------------------------------------------------

class ExpansiveWitness:
    """A variable X, a rule A -> gamma reachable from X whose body can
    spawn X twice, the two positions in gamma doing so, and a derivation
    replaying X =>* w0 X w1 X w2."""

    __slots__ = ("variable", "rule", "positions", "derivation")

    def __init__(self, variable, rule, positions, derivation):
        self.variable = variable
        self.rule = rule
        self.positions = tuple(positions)
        self.derivation = derivation

    def __repr__(self):
        return "ExpansiveWitness(%s via rule %d at %s)" % (
            self.variable, self.rule, self.positions)


def _occurrence_edges(grammar):
    """Edges (X, Y, rule index, occurrence position): Y occurs in the
    body of a rule of X."""
    edges = {v: [] for v in grammar.variables}
    for ri, rule in enumerate(grammar.rules):
        for pos, sym in enumerate(rule.rhs):
            if grammar.is_variable(sym):
                edges[rule.lhs].append((sym, ri, pos))
    return edges


def _reachability(grammar, edges):
    """reach[X] = variables occurring in some sentential form derivable
    from X (reflexive-transitive)."""
    reach = {v: {v} for v in grammar.variables}
    changed = True
    while changed:
        changed = False
        for u in grammar.variables:
            for v, _, _ in edges[u]:
                add = reach[v] - reach[u]
                if add:
                    reach[u] |= add
                    changed = True
    return reach


def _shortest_path(origin, goal, edges):
    """Hop list [(rule, pos), ...] of a shortest occurrence path from
    origin to goal; [] when origin == goal."""
    if origin == goal:
        return []
    parent = {origin: None}
    queue = [origin]
    while queue:
        nxt = []
        for u in queue:
            for v, ri, pos in edges[u]:
                if v not in parent:
                    parent[v] = (u, ri, pos)
                    if v == goal:
                        hops = []
                        node = v
                        while parent[node] is not None:
                            back = parent[node]
                            hops.append((back[1], back[2]))
                            node = back[0]
                        hops.reverse()
                        return hops
                    nxt.append(v)
        queue = nxt
    return None


def is_nonexpansive(grammar):
    """(True, None) when no derivation duplicates a variable; otherwise
    (False, ExpansiveWitness).

    Expansiveness check: some variable X reaches a rule A -> gamma (by
    occurrence) whose body holds two positions that each reach X back.
    All variables are examined, whether or not the start reaches them.
    """
    edges = _occurrence_edges(grammar)
    reach = _reachability(grammar, edges)
    for x in grammar.variables:
        for ri, rule in enumerate(grammar.rules):
            if rule.lhs not in reach[x]:
                continue
            spots = [
                pos for pos, sym in enumerate(rule.rhs)
                if grammar.is_variable(sym) and x in reach[sym]
            ]
            if len(spots) < 2:
                continue
            i, j = spots[0], spots[1]
            form = _Form(x)
            hops = _shortest_path(x, rule.lhs, edges)
            target = form.root
            for hri, hpos in hops:
                fresh = form.apply(target, hri, grammar.rules[hri])
                target = fresh[hpos]
            fresh = form.apply(target, ri, rule)
            for pos in (i, j):
                cell = fresh[pos]
                for hri, hpos in _shortest_path(cell.sym, x, edges):
                    inner = form.apply(cell, hri, grammar.rules[hri])
                    cell = inner[hpos]
            witness = ExpansiveWitness(x, ri, (i, j), form.derivation())
            return False, witness
    return True, None


# --- degree and dimension ------------------------------------------------

def degree(grammar):
    """Largest number of variable occurrences in a rule body, minus one;
    clamped to 0 for grammars whose rules are all terminal-only."""
    top = max(len(grammar.rhs_variables(r)) for r in grammar.rules)
    return max(top - 1, 0)


def _combine_dims(dims):
    if not dims:
        return 0
    top = max(dims)
    if dims.count(top) >= 2:
        return top + 1
    return top


def dimension_bound(grammar):
    """Least k such that every parse tree of the grammar has dimension
    at most k, by Kleene iteration of the per-variable recurrence.

    The per-variable values of the least fixed point never exceed the
    variable count for a nonexpansive grammar; a value passing that cap
    certifies divergence and raises ExpansiveGrammar, with the
    duplication witness attached.
    """
    cap = len(grammar.variables)
    bound = {v: 0 for v in grammar.variables}
    while True:
        nxt = {}
        for v in grammar.variables:
            nxt[v] = max(
                _combine_dims([bound[s] for s in grammar.rules[ri].rhs
                               if grammar.is_variable(s)])
                for ri in grammar.rules_for(v)
            )
        if any(val > cap for val in nxt.values()):
            _, witness = is_nonexpansive(grammar)
            raise ExpansiveGrammar(
                "dimension recurrence diverges: grammar is expansive",
                witness,
            )
        if nxt == bound:
            return max(bound.values())
        bound = nxt
