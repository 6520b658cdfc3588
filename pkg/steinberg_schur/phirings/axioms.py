"""
Module to check the axioms of finite Phi-rings and of their varieties by exhaustive evaluation.

Each axiom is an identity lhs = rhs between terms in typed variables. Terms are evaluated on whole carriers
at once with numpy fancy indexing, so every check runs over all tuples. The witness of a failed axiom is the
least failing tuple in carrier order.
"""
import numpy as np

# Tuples evaluated per numpy block
BLOCK = 1 << 21


class TableOps:
    """
    Vectorized access to the operation tables of a signature.

    Operations with arguments are exposed as callables (ops.mul(a, b)), constants as ints (ops.one).
    """
    def __init__(self, signature):
        self.signature = signature
        self._tables = {op.name: op.table for op in signature.operations}
        self.r = RingView(self, '') if 'add' in self._tables else None
        self.s = RingView(self, 's') if 'sadd' in self._tables else None

    def has(self, name):
        return name in self._tables

    def get(self, name):
        return self._tables.get(name)

    def size(self, sort):
        return self.signature.sorts[sort]

    def __getattr__(self, name):
        tables = self.__dict__.get('_tables', {})
        if name not in tables:
            raise AttributeError(name)
        table = tables[name]
        if table.ndim == 0:
            return int(table)
        return lambda *args: table[tuple(args)]


class RingView:
    """
    Ring operations of one sort (prefix '' for R, 's' for S).
    """
    def __init__(self, ops, prefix):
        self._ops = ops
        self._add = ops.get(prefix + 'add')
        self._neg = ops.get(prefix + 'neg')
        self._mul = ops.get(prefix + 'mul')
        self._star = ops.get(prefix + 'star')
        one = ops.get(prefix + 'one')
        self.one = None if one is None else int(one)

    def add(self, a, b):
        return self._add[a, b]

    def neg(self, a):
        return self._neg[a]

    def sub(self, a, b):
        return self._add[a, self._neg[b]]

    def mul(self, a, b):
        return self._mul[a, b]

    def star(self, a):
        if self._star is None:
            return a
        return self._star[a]

    def total(self, *terms):
        result = terms[0]
        for term in terms[1:]:
            result = self._add[result, term]
        return result

    def twice(self, a):
        return self._add[a, a]

    def thrice(self, a):
        return self._add[self._add[a, a], a]

    def square(self, a):
        return self._mul[a, a]

    def cube(self, a):
        return self._mul[self._mul[a, a], a]

    def assoc(self, a, b, c):
        return self.sub(self._mul[self._mul[a, b], c], self._mul[a, self._mul[b, c]])


class Axiom:
    """
    One identity between two terms.

    Parameters
    ----------
    name : string (required)

    sorts : string (required)
        Sort of every variable, one character per variable ('R', 'D' or 'S').

    lhs : callable (required)
        Function (ops, *variables) -> ids.

    rhs : callable (default=None)
        Function (ops, *variables) -> ids. The zero element when None.

    requires : tuple of strings (default=())
        Operations that must exist for the axiom to apply.

    result : string (default='R')
        Sort of the two terms.
    """
    def __init__(self, name, sorts, lhs, rhs=None, requires=(), result='R'):
        self.name = name
        self.sorts = sorts
        self.lhs = lhs
        self.rhs = rhs if rhs is not None else (lambda o, *v: 0)
        self.requires = tuple(requires)
        self.result = result

    def __repr__(self):
        return f'Axiom({self.name!r})'

    def applies(self, ops):
        return all(ops.has(name) for name in self.requires)

    def instances(self, ops):
        """
        Evaluate both sides on every tuple, block by block over the first variable.

        Yields
        ------
        (lhs, rhs, variables) : numpy arrays of equal shape and the variable grids
        """
        sizes = [ops.size(sort) for sort in self.sorts]
        if not sizes:
            value = np.asarray(self.lhs(ops)), np.asarray(self.rhs(ops))
            yield value[0].reshape(1), value[1].reshape(1), []
            return
        rest = int(np.prod(sizes[1:])) if len(sizes) > 1 else 1
        step = max(1, BLOCK // max(rest, 1))
        for start in range(0, sizes[0], step):
            stop = min(sizes[0], start + step)
            shape = [stop - start] + sizes[1:]
            grids = []
            for k, n in enumerate(sizes):
                axis = np.arange(start, stop) if k == 0 else np.arange(n)
                view = [1] * len(sizes)
                view[k] = len(axis)
                grids.append(axis.reshape(view))
            lhs = np.broadcast_to(np.asarray(self.lhs(ops, *grids)), shape)
            rhs = np.broadcast_to(np.asarray(self.rhs(ops, *grids)), shape)
            yield lhs, rhs, [np.broadcast_to(g, shape) for g in grids]

    def witness(self, ops):
        """
        Get the least tuple violating the axiom, or None.
        """
        for lhs, rhs, grids in self.instances(ops):
            bad = lhs != rhs
            if bad.any():
                position = np.unravel_index(int(np.argmax(bad)), bad.shape)
                return tuple(int(g[position]) for g in grids)
        return None


class Violation:
    """
    A failed axiom with its witness tuple.
    """
    def __init__(self, axiom, witness, labels):
        self.axiom = axiom
        self.witness = witness
        self.labels = labels

    def __repr__(self):
        return f'Violation({self.axiom!r}, witness={self.labels})'

    def __str__(self):
        return f'{self.axiom}: witness ({", ".join(self.labels)})'


class AxiomReport:
    """
    Result of check_axioms: the list of violations, empty for a valid algebra.
    """
    def __init__(self, kind, violations, checked):
        self.kind = kind
        self.violations = list(violations)
        self.checked = checked

    @property
    def ok(self):
        return not self.violations

    def __iter__(self):
        return iter(self.violations)

    def __len__(self):
        return len(self.violations)

    def names(self):
        return [v.axiom for v in self.violations]

    def __repr__(self):
        return f'AxiomReport(kind={self.kind!r}, checked={self.checked}, violations={self.violations})'


# Axiom lists
def _star_axioms(prefix, sort):
    view = (lambda o: o.r) if prefix == '' else (lambda o: o.s)
    star = prefix + 'star'
    return [
        Axiom(f'{sort}: star is additive', sort * 2,
              lambda o, p, q: view(o).star(view(o).add(p, q)),
              lambda o, p, q: view(o).add(view(o).star(p), view(o).star(q)), requires=(star,)),
        Axiom(f'{sort}: star is anti-multiplicative', sort * 2,
              lambda o, p, q: view(o).star(view(o).mul(p, q)),
              lambda o, p, q: view(o).mul(view(o).star(q), view(o).star(p)), requires=(star,)),
        Axiom(f'{sort}: star fixes the unit', '',
              lambda o: view(o).star(view(o).one), lambda o: view(o).one, requires=(star, prefix + 'one')),
    ]


def ring_axioms(prefix='', sort='R'):
    """
    Abelian group, biadditivity and unit axioms of one ring sort.
    """
    view = (lambda o: o.r) if prefix == '' else (lambda o: o.s)
    one = prefix + 'one'
    return [
        Axiom(f'{sort}: addition is associative', sort * 3,
              lambda o, p, q, r: view(o).add(view(o).add(p, q), r),
              lambda o, p, q, r: view(o).add(p, view(o).add(q, r))),
        Axiom(f'{sort}: addition is commutative', sort * 2,
              lambda o, p, q: view(o).add(p, q), lambda o, p, q: view(o).add(q, p)),
        Axiom(f'{sort}: negation', sort, lambda o, p: view(o).add(p, view(o).neg(p))),
        Axiom(f'{sort}: left distributivity', sort * 3,
              lambda o, p, q, r: view(o).mul(p, view(o).add(q, r)),
              lambda o, p, q, r: view(o).add(view(o).mul(p, q), view(o).mul(p, r))),
        Axiom(f'{sort}: right distributivity', sort * 3,
              lambda o, p, q, r: view(o).mul(view(o).add(p, q), r),
              lambda o, p, q, r: view(o).add(view(o).mul(p, r), view(o).mul(q, r))),
        Axiom(f'{sort}: left unit', sort, lambda o, p: view(o).mul(view(o).one, p), lambda o, p: p,
              requires=(one,)),
        Axiom(f'{sort}: right unit', sort, lambda o, p: view(o).mul(p, view(o).one), lambda o, p: p,
              requires=(one,)),
    ] + _star_axioms(prefix, sort)


def associative_axioms(prefix='', sort='R'):
    view = (lambda o: o.r) if prefix == '' else (lambda o: o.s)
    return [Axiom(f'{sort}: multiplication is associative', sort * 3,
                  lambda o, p, q, r: view(o).assoc(p, q, r), result=sort)]


def commutative_axioms(prefix='', sort='R'):
    view = (lambda o: o.r) if prefix == '' else (lambda o: o.s)
    return [Axiom(f'{sort}: multiplication is commutative', sort * 2,
                  lambda o, p, q: view(o).mul(p, q), lambda o, p, q: view(o).mul(q, p), result=sort)]


def alternative_axioms(prefix='', sort='R'):
    view = (lambda o: o.r) if prefix == '' else (lambda o: o.s)
    return [
        Axiom(f'{sort}: left alternative [p, p, q] = 0', sort * 2, lambda o, p, q: view(o).assoc(p, p, q)),
        Axiom(f'{sort}: right alternative [p, q, q] = 0', sort * 2, lambda o, p, q: view(o).assoc(p, q, q)),
    ]


def _nuclear(name, sorts, term, view=lambda o: o.r, sort='R', requires=()):
    """
    Axioms saying that the values of term (a function of variables of the given sorts) are nuclear.
    """
    k = len(sorts)
    return [
        Axiom(f'{name} is nuclear (left)', sorts + sort * 2,
              lambda o, *v: view(o).assoc(term(o, *v[:k]), v[k], v[k + 1]), requires=requires),
        Axiom(f'{name} is nuclear (middle)', sorts + sort * 2,
              lambda o, *v: view(o).assoc(v[k], term(o, *v[:k]), v[k + 1]), requires=requires),
        Axiom(f'{name} is nuclear (right)', sorts + sort * 2,
              lambda o, *v: view(o).assoc(v[k], v[k + 1], term(o, *v[:k])), requires=requires),
    ]


def _dsub(o, u, v):
    return o.dadd(u, o.dneg(v))


def b_ring_axioms():
    """
    Axioms of a B_l-ring (R, Delta). Axioms involving 1, lambda or iota apply only to unital B-rings;
    the lambda axioms of non-unital B-rings are stated through the extra operations.
    """
    axioms = ring_axioms() + alternative_axioms()
    axioms += [
        # lambda
        Axiom('lambda [p, q, r] = -[p, q, r]', 'RRR',
              lambda o, p, q, r: o.lam_left(o.r.assoc(p, q, r)), lambda o, p, q, r: o.r.neg(o.r.assoc(p, q, r))),
        Axiom('lambda^-1 [p, q, r] = -[p, q, r]', 'RRR',
              lambda o, p, q, r: o.lam_inv_left(o.r.assoc(p, q, r)),
              lambda o, p, q, r: o.r.neg(o.r.assoc(p, q, r))),
        Axiom('[lambda p, q, r] = -[p, q, r]', 'RRR',
              lambda o, p, q, r: o.r.assoc(o.lam_left(p), q, r), lambda o, p, q, r: o.r.neg(o.r.assoc(p, q, r))),
        Axiom('[p lambda, q, r] = -[p, q, r]', 'RRR',
              lambda o, p, q, r: o.r.assoc(o.lam_right(p), q, r), lambda o, p, q, r: o.r.neg(o.r.assoc(p, q, r))),
        Axiom('[p, q, r] lambda = -[p, q, r]', 'RRR',
              lambda o, p, q, r: o.lam_right(o.r.assoc(p, q, r)), lambda o, p, q, r: o.r.neg(o.r.assoc(p, q, r))),
        Axiom('lambda lambda^-1 = 1', '', lambda o: o.r.mul(o.lam, o.lam_inv), lambda o: o.r.one,
              requires=('lam', 'lam_inv', 'one')),
        Axiom('lambda^-1 lambda = 1', '', lambda o: o.r.mul(o.lam_inv, o.lam), lambda o: o.r.one,
              requires=('lam', 'lam_inv', 'one')),
        # involution
        Axiom('lambda^* = lambda^-1', '', lambda o: o.r.star(o.lam), lambda o: o.lam_inv, requires=('lam', 'lam_inv')),
        Axiom('p^** = lambda p lambda^-1', 'R', lambda o, p: o.r.star(o.r.star(p)),
              lambda o, p: o.lam_inv_right(o.lam_left(p))),
        Axiom('[p^*, q, r] = -[p, q, r]', 'RRR', lambda o, p, q, r: o.r.assoc(o.r.star(p), q, r),
              lambda o, p, q, r: o.r.neg(o.r.assoc(p, q, r))),
        Axiom('[p, q, r]^* = -[p, q, r]', 'RRR', lambda o, p, q, r: o.r.star(o.r.assoc(p, q, r)),
              lambda o, p, q, r: o.r.neg(o.r.assoc(p, q, r))),
        # the group Delta
        Axiom('Delta: addition is associative', 'DDD', lambda o, u, v, w: o.dadd(o.dadd(u, v), w),
              lambda o, u, v, w: o.dadd(u, o.dadd(v, w))),
        Axiom('Delta: zero', 'D', lambda o, u: o.dadd(0, u), lambda o, u: u),
        Axiom('Delta: negation', 'D', lambda o, u: o.dadd(u, o.dneg(u))),
        # phi
        Axiom('phi is additive', 'RR', lambda o, p, q: o.phi(o.r.add(p, q)),
              lambda o, p, q: o.dadd(o.phi(p), o.phi(q))),
        Axiom('phi has central image', 'RD', lambda o, p, u: o.dadd(o.phi(p), u), lambda o, p, u: o.dadd(u, o.phi(p))),
        Axiom('phi(p + p^* lambda) = 0', 'R', lambda o, p: o.phi(o.r.add(p, o.lam_right(o.r.star(p))))),
        Axiom('phi((pq)r) = phi(p(qr))', 'RRR', lambda o, p, q, r: o.phi(o.r.mul(o.r.mul(p, q), r)),
              lambda o, p, q, r: o.phi(o.r.mul(p, o.r.mul(q, r)))),
        # pairing
        Axiom('pairing is additive on the left', 'DDD', lambda o, u, v, w: o.pair(o.dadd(u, v), w),
              lambda o, u, v, w: o.r.add(o.pair(u, w), o.pair(v, w))),
        Axiom('pairing is additive on the right', 'DDD', lambda o, u, v, w: o.pair(u, o.dadd(v, w)),
              lambda o, u, v, w: o.r.add(o.pair(u, v), o.pair(u, w))),
        Axiom('<v, u> = <u, v>^* lambda', 'DD', lambda o, u, v: o.pair(v, u),
              lambda o, u, v: o.lam_right(o.r.star(o.pair(u, v)))),
        Axiom('<u, phi(p)> = 0', 'DR', lambda o, u, p: o.pair(u, o.phi(p))),
        Axiom('u + v = v + u - phi(<u, v>)', 'DD', lambda o, u, v: o.dadd(u, v),
              lambda o, u, v: _dsub(o, o.dadd(v, u), o.phi(o.pair(u, v)))),
        # rho
        Axiom('rho(u + v) = rho(u) - <u, v> + rho(v)', 'DD', lambda o, u, v: o.rho(o.dadd(u, v)),
              lambda o, u, v: o.r.add(o.r.sub(o.rho(u), o.pair(u, v)), o.rho(v))),
        Axiom('rho(phi(p)) = p - p^* lambda', 'R', lambda o, p: o.rho(o.phi(p)),
              lambda o, p: o.r.sub(p, o.lam_right(o.r.star(p)))),
        Axiom('rho(u) + <u, u> + rho(u)^* lambda = 0', 'D',
              lambda o, u: o.r.total(o.rho(u), o.pair(u, u), o.lam_right(o.r.star(o.rho(u))))),
        Axiom('rho(iota) = 1', '', lambda o: o.rho(o.iota), lambda o: o.r.one, requires=('iota', 'one')),
        # action
        Axiom('action is additive on the left', 'DDR', lambda o, u, v, p: o.act(o.dadd(u, v), p),
              lambda o, u, v, p: o.dadd(o.act(u, p), o.act(v, p))),
        Axiom('u.(p + q) = u.p + phi(q^* rho(u) p) + u.q', 'DRR', lambda o, u, p, q: o.act(u, o.r.add(p, q)),
              lambda o, u, p, q: o.dadd(o.dadd(o.act(u, p), o.phi(o.r.mul(o.r.mul(o.r.star(q), o.rho(u)), p))),
                                        o.act(u, q))),
        Axiom('<u, v.p> = <u, v> p', 'DDR', lambda o, u, v, p: o.pair(u, o.act(v, p)),
              lambda o, u, v, p: o.r.mul(o.pair(u, v), p)),
        Axiom('u.1 = u', 'D', lambda o, u: o.act(u, o.r.one), lambda o, u: u, requires=('one',)),
        Axiom('phi(p).q = phi(q^* p q)', 'RR', lambda o, p, q: o.act(o.phi(p), q),
              lambda o, p, q: o.phi(o.r.mul(o.r.mul(o.r.star(q), p), q))),
        Axiom('(u.p).q = u.(pq)', 'DRR', lambda o, u, p, q: o.act(o.act(u, p), q),
              lambda o, u, p, q: o.act(u, o.r.mul(p, q))),
        Axiom('rho(u.p) = p^* rho(u) p', 'DR', lambda o, u, p: o.rho(o.act(u, p)),
              lambda o, u, p: o.r.mul(o.r.mul(o.r.star(p), o.rho(u)), p)),
        # additional identities
        Axiom('[p^*, p, q] = 0', 'RR', lambda o, p, q: o.r.assoc(o.r.star(p), p, q)),
        Axiom('<iota, iota> = -1 - lambda', '', lambda o: o.pair(o.iota, o.iota),
              lambda o: o.r.sub(o.r.neg(o.r.one), o.lam), requires=('iota', 'one', 'lam')),
        Axiom('lambda^** = lambda', '', lambda o: o.r.star(o.r.star(o.lam)), lambda o: o.lam, requires=('lam',)),
        Axiom('u.0 = 0', 'D', lambda o, u: o.act(u, 0)),
        Axiom('<phi(p), u> = 0', 'RD', lambda o, p, u: o.pair(o.phi(p), u)),
        Axiom('u + u.(-1) = phi(rho(u))', 'D', lambda o, u: o.dadd(u, o.act(u, o.r.neg(o.r.one))),
              lambda o, u: o.phi(o.rho(u)), requires=('one',)),
        Axiom('rho(0) = 0', '', lambda o: o.rho(0)),
        Axiom('u.((pq)r) = u.(p(qr))', 'DRRR', lambda o, u, p, q, r: o.act(u, o.r.mul(o.r.mul(p, q), r)),
              lambda o, u, p, q, r: o.act(u, o.r.mul(p, o.r.mul(q, r)))),
        Axiom('rho(-u) = rho(u)^* lambda', 'D', lambda o, u: o.rho(o.dneg(u)),
              lambda o, u: o.lam_right(o.r.star(o.rho(u)))),
        Axiom('<u.p, v> = p^* <u, v>', 'DRD', lambda o, u, p, v: o.pair(o.act(u, p), v),
              lambda o, u, p, v: o.r.mul(o.r.star(p), o.pair(u, v))),
    ]
    axioms += _nuclear('lambda', '', lambda o: o.lam, requires=('lam',))
    axioms += _nuclear('rho', 'D', lambda o, u: o.rho(u))
    axioms += _nuclear('pairing', 'DD', lambda o, u, v: o.pair(u, v))
    return axioms


def _cross_axioms(x, y, X, Y, phi, rho):
    """
    F4 axioms for the maps phi, rho from sort X to sort Y, written with the ring views x (of X) and y (of Y).
    """
    vx = (lambda o: o.r) if x == '' else (lambda o: o.s)
    vy = (lambda o: o.r) if y == '' else (lambda o: o.s)
    f = lambda o, p: getattr(o, phi)(p)
    g = lambda o, p: getattr(o, rho)(p)
    # The reverse maps from Y to X
    back_phi = 'phi_s' if phi == 'phi_r' else 'phi_r'
    back_rho = 'rho_s' if rho == 'rho_r' else 'rho_r'
    bf = lambda o, u: getattr(o, back_phi)(u)
    bg = lambda o, u: getattr(o, back_rho)(u)
    return [
        Axiom(f'{phi} is additive', X * 2, lambda o, p, q: f(o, vx(o).add(p, q)),
              lambda o, p, q: vy(o).add(f(o, p), f(o, q))),
        Axiom(f'{phi} has central image (commuting)', X + Y, lambda o, p, u: vy(o).mul(f(o, p), u),
              lambda o, p, u: vy(o).mul(u, f(o, p))),
    ] + _nuclear(phi, X, f, view=vy, sort=Y) + _nuclear(rho, X, g, view=vy, sort=Y) + [
        Axiom(f'{phi}(pq) = {phi}(qp)', X * 2, lambda o, p, q: f(o, vx(o).mul(p, q)),
              lambda o, p, q: f(o, vx(o).mul(q, p))),
        Axiom(f'{phi}(p^*) = {phi}(p)', X, lambda o, p: f(o, vx(o).star(p)), lambda o, p: f(o, p)),
        Axiom(f'{phi}(p)^* = {phi}(p)', X, lambda o, p: vy(o).star(f(o, p)), lambda o, p: f(o, p)),
        Axiom(f'{phi}((pq)r) = {phi}(p(qr))', X * 3, lambda o, p, q, r: f(o, vx(o).mul(vx(o).mul(p, q), r)),
              lambda o, p, q, r: f(o, vx(o).mul(p, vx(o).mul(q, r)))),
        Axiom(f'{phi}({phi}(p)) = 0', X, lambda o, p: bf(o, f(o, p))),
        Axiom(f'{rho}(1) = 1', '', lambda o: g(o, vx(o).one), lambda o: vy(o).one),
        Axiom(f'{rho} is multiplicative', X * 2, lambda o, p, q: g(o, vx(o).mul(p, q)),
              lambda o, p, q: vy(o).mul(g(o, p), g(o, q))),
        Axiom(f'{rho} has central image (commuting)', X + Y, lambda o, p, u: vy(o).mul(g(o, p), u),
              lambda o, p, u: vy(o).mul(u, g(o, p))),
        Axiom(f'u {phi}(p) = {phi}({rho}(u) p)', Y + X, lambda o, u, p: vy(o).mul(u, f(o, p)),
              lambda o, u, p: f(o, vx(o).mul(bg(o, u), p))),
        Axiom(f'{rho}(p^*) = {rho}(p)', X, lambda o, p: g(o, vx(o).star(p)), lambda o, p: g(o, p)),
        Axiom(f'{rho}(p)^* = {rho}(p)', X, lambda o, p: vy(o).star(g(o, p)), lambda o, p: g(o, p)),
        Axiom(f'{rho}(p + q) = {rho}(p) + {phi}(p q^*) + {rho}(q)', X * 2, lambda o, p, q: g(o, vx(o).add(p, q)),
              lambda o, p, q: vy(o).total(g(o, p), f(o, vx(o).mul(p, vx(o).star(q))), g(o, q))),
        Axiom(f'{rho}({rho}(p)) = p p^*', X, lambda o, p: bg(o, g(o, p)), lambda o, p: vx(o).mul(p, vx(o).star(p))),
        Axiom(f'p + p^* = {rho}({phi}(p)) + {phi}({rho}(p))', X, lambda o, p: vx(o).add(p, vx(o).star(p)),
              lambda o, p: vx(o).add(bg(o, f(o, p)), bf(o, g(o, p)))),
    ]


def _involution_axioms(prefix, sort):
    view = (lambda o: o.r) if prefix == '' else (lambda o: o.s)
    return [
        Axiom(f'{sort}: p^** = p', sort, lambda o, p: view(o).star(view(o).star(p)), lambda o, p: p),
        Axiom(f'{sort}: [p^*, q, r] = -[p, q, r]', sort * 3, lambda o, p, q, r: view(o).assoc(view(o).star(p), q, r),
              lambda o, p, q, r: view(o).neg(view(o).assoc(p, q, r))),
        Axiom(f'{sort}: [p, q, r]^* = -[p, q, r]', sort * 3, lambda o, p, q, r: view(o).star(view(o).assoc(p, q, r)),
              lambda o, p, q, r: view(o).neg(view(o).assoc(p, q, r))),
    ]


def f4_ring_axioms():
    """
    Axioms of an F4-ring (R, S).
    """
    axioms = []
    for prefix, sort in (('', 'R'), ('s', 'S')):
        axioms += ring_axioms(prefix, sort) + alternative_axioms(prefix, sort) + _involution_axioms(prefix, sort)
    axioms += _cross_axioms('', 's', 'R', 'S', 'phi_r', 'rho_r')
    axioms += _cross_axioms('s', '', 'S', 'R', 'phi_s', 'rho_s')
    return axioms


# Varieties
def _boolean_like(prefix='', sort='R'):
    view = (lambda o: o.r) if prefix == '' else (lambda o: o.s)
    return associative_axioms(prefix, sort) + commutative_axioms(prefix, sort) + [
        Axiom(f'{sort}: 2p = 0', sort, lambda o, p: view(o).twice(p), result=sort),
    ]


def r2_axioms():
    return _boolean_like() + [Axiom('p^2 = p', 'R', lambda o, p: o.r.square(p), lambda o, p: p)]


def r2eps_axioms():
    return _boolean_like() + [
        Axiom('(p^2 - p)(q^2 - q) = 0', 'RR',
              lambda o, p, q: o.r.mul(o.r.sub(o.r.square(p), p), o.r.sub(o.r.square(q), q))),
        Axiom('p = p^*', 'R', lambda o, p: o.r.star(p), lambda o, p: p, requires=('star',)),
    ]


def r3_axioms():
    return associative_axioms() + commutative_axioms() + [
        Axiom('lambda p = p', 'R', lambda o, p: o.lam_left(p), lambda o, p: p, requires=('lam_left',)),
        Axiom('lambda^-1 p = p', 'R', lambda o, p: o.lam_inv_left(p), lambda o, p: p, requires=('lam_inv_left',)),
        Axiom('p^* = p', 'R', lambda o, p: o.r.star(p), lambda o, p: p, requires=('star',)),
        Axiom('3p = 0', 'R', lambda o, p: o.r.thrice(p)),
        Axiom('p^3 = p', 'R', lambda o, p: o.r.cube(p), lambda o, p: p),
        Axiom('u = iota.<iota, u>', 'D', lambda o, u: u, lambda o, u: o.iota_dot(o.iota_pair(u)),
              requires=('iota_dot', 'iota_pair'), result='D'),
    ]


def _act_two(o, u):
    # u.2 = u.(1 + 1) = u + phi(rho(u)) + u
    return o.dadd(o.dadd(u, o.phi(o.rho(u))), u)


def r2star_axioms():
    return _boolean_like() + [
        Axiom('lambda p = p', 'R', lambda o, p: o.lam_left(p), lambda o, p: p),
        Axiom('lambda^-1 p = p', 'R', lambda o, p: o.lam_inv_left(p), lambda o, p: p),
        Axiom('(p p^*)^2 = p p^*', 'R', lambda o, p: o.r.square(o.r.mul(p, o.r.star(p))),
              lambda o, p: o.r.mul(p, o.r.star(p))),
        Axiom('u.2 = 0', 'D', _act_two, result='D'),
        Axiom('u.lambda = u', 'D', lambda o, u: o.act_lam(u), lambda o, u: u, result='D'),
        Axiom('u.lambda^-1 = u', 'D', lambda o, u: o.act_lam_inv(u), lambda o, u: u, result='D'),
        Axiom('<u, u> = 0', 'D', lambda o, u: o.pair(u, u)),
    ]


def r4_axioms():
    return r2star_axioms() + [
        Axiom('p^* = p^2', 'R', lambda o, p: o.r.star(p), lambda o, p: o.r.square(p)),
        Axiom('u = iota.rho(u)', 'D', lambda o, u: u, lambda o, u: o.iota_dot(o.rho(u)), result='D'),
    ]


def r2b_axioms():
    return r2star_axioms() + [
        Axiom('p = p^*', 'R', lambda o, p: o.r.star(p), lambda o, p: p),
        Axiom('p^2 = p', 'R', lambda o, p: o.r.square(p), lambda o, p: p),
        Axiom('<iota, u> rho(u) = 0', 'D', lambda o, u: o.r.mul(o.iota_pair(u), o.rho(u))),
        Axiom('u.<iota, u> + iota.rho(u) = u', 'D',
              lambda o, u: o.dadd(o.act(u, o.iota_pair(u)), o.iota_dot(o.rho(u))), lambda o, u: u, result='D'),
    ]


def r2epsdelta_axioms():
    def last(o, u, v):
        # <u,v>^2 + <u,v>^2 <iota,u>^2 + <iota,v>^2 rho(u)^2
        uv = o.r.square(o.pair(u, v))
        return o.r.total(uv, o.r.mul(uv, o.r.square(o.iota_pair(u))),
                         o.r.mul(o.r.square(o.iota_pair(v)), o.r.square(o.rho(u))))
    return r2star_axioms() + [
        Axiom('p = p^*', 'R', lambda o, p: o.r.star(p), lambda o, p: p),
        Axiom('(p^2 - p)(q^2 - q) = 0', 'RR',
              lambda o, p, q: o.r.mul(o.r.sub(o.r.square(p), p), o.r.sub(o.r.square(q), q))),
        Axiom('u.<iota, v> + v.<iota, u> = iota.<u, v>', 'DD',
              lambda o, u, v: o.dadd(o.act(u, o.iota_pair(v)), o.act(v, o.iota_pair(u))),
              lambda o, u, v: o.iota_dot(o.pair(u, v)), result='D'),
        Axiom('phi(p) = 0', 'R', lambda o, p: o.phi(p), result='D'),
        Axiom('<iota, u> rho(u) = rho(u)^2 - rho(u)', 'D', lambda o, u: o.r.mul(o.iota_pair(u), o.rho(u)),
              lambda o, u: o.r.sub(o.r.square(o.rho(u)), o.rho(u))),
        Axiom('<u,v>^2 + <u,v>^2 <iota,u>^2 + <iota,v>^2 rho(u)^2 = 0', 'DD', last),
    ]


def r44_axioms():
    axioms = []
    for prefix, sort, lam in (('', 'R', 'lam_r'), ('s', 'S', 'lam_s')):
        view = (lambda o: o.r) if prefix == '' else (lambda o: o.s)
        axioms += _boolean_like(prefix, sort)
        axioms += [
            Axiom(f'{sort}: lambda p = p', sort, lambda o, p, view=view, lam=lam: view(o).mul(getattr(o, lam), p),
                  lambda o, p: p, requires=(lam,), result=sort),
            Axiom(f'{sort}: p^* = p^2', sort, lambda o, p, view=view: view(o).star(p),
                  lambda o, p, view=view: view(o).square(p), result=sort),
        ]
    return axioms


STRUCTURES = {
    'ring': lambda: ring_axioms(),
    'associative': lambda: ring_axioms() + associative_axioms(),
    'commutative': lambda: ring_axioms() + associative_axioms() + commutative_axioms(),
    'alternative': lambda: ring_axioms() + alternative_axioms(),
    'b_ring': b_ring_axioms,
    'f4_ring': f4_ring_axioms,
}

# Variety name -> (algebra kinds it applies to, identities)
VARIETIES = {
    'r2': (('ring',), r2_axioms),
    'r2eps': (('ring',), r2eps_axioms),
    'r3': (('ring', 'b_ring'), r3_axioms),
    'r2star': (('b_ring',), r2star_axioms),
    'r4': (('b_ring',), r4_axioms),
    'r2b': (('b_ring',), r2b_axioms),
    'r2epsdelta': (('b_ring',), r2epsdelta_axioms),
    'r44': (('f4_ring',), r44_axioms),
}


def variety_axioms(variety, algebra):
    """
    Get the defining identities of a variety, checking the algebra kind matches.
    """
    if variety not in VARIETIES:
        raise ValueError(f'Unknown variety {variety}. Choose from {list(VARIETIES)}')
    kinds, build = VARIETIES[variety]
    if algebra.kind not in kinds:
        raise ValueError(f'Variety {variety} applies to {", ".join(kinds)}, got a {algebra.kind}')
    return build()


def _labels(algebra, axiom, witness):
    labels = algebra.sort_labels()
    return [labels[sort][k] for sort, k in zip(axiom.sorts, witness)]


def check_axioms(kind, algebra):
    """
    Evaluate every axiom of a structure or variety on all tuples.

    Parameters
    ----------
    kind : string (required)
        A structure ('ring', 'associative', 'commutative', 'alternative', 'b_ring', 'f4_ring') or a variety name.

    algebra : FiniteRing, BRing or F4Ring (required)

    Returns
    -------
    report : AxiomReport
        One violation (with the least witness tuple) per failed axiom.
    """
    if kind in STRUCTURES:
        axioms = STRUCTURES[kind]()
    elif kind in VARIETIES:
        axioms = variety_axioms(kind, algebra)
    else:
        raise ValueError(f'Unknown axiom kind {kind}. Choose from {list(STRUCTURES) + list(VARIETIES)}')
    ops = TableOps(algebra.signature())
    violations = []
    checked = 0
    for axiom in axioms:
        if not axiom.applies(ops):
            continue
        checked += 1
        witness = axiom.witness(ops)
        if witness is not None:
            violations.append(Violation(axiom.name, witness, _labels(algebra, axiom, witness)))
    return AxiomReport(kind, violations, checked)
