"""Recurrence coefficient schemes and perturbation records.

A scheme supplies the data of the three-term recurrence

    P_{n+1}(z) = rho_n (z - c_n) P_n(z) - lambda_n W_n(z) P_{n-1}(z)

where the weight factor W_n(z) depends on the scheme kind:

* "general": W_n(z) = (z - a_n)(z - b_n) with exact (possibly Gaussian
  rational, conjugate-pair) nodes a_n, b_n;
* "special": a_n = i*omega, b_n = -i*omega for all n, so W_n(z) = z^2 + omega^2
  with real rational coefficients;
* "oprl":    W_n(z) = 1, the classical real-line three-term recurrence.

Coefficients are total functions of the index; they may be passed as a single
constant, a finite table (list — queries past the end raise SchemeIndexError),
or a callable rule.  lambda_n is only ever queried for n >= 1.

A Perturbation optionally shifts one recurrence center (co-recursion,
c_k -> c_k + mu) and/or scales one coefficient (co-dilation,
lambda_kp -> nu * lambda_kp, kp >= 1).  Both may be present, at equal or
different levels, in either order.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .errors import PerturbationError, SchemeIndexError
from .exact import GaussianRational, format_rational, rational
from .poly import Poly


def as_coeff_fn(spec, name):
    """Normalize a constant / list / callable coefficient spec to fn(n)."""
    if callable(spec):
        def rule(n, _f=spec):
            return _f(n)
        return rule
    if isinstance(spec, (list, tuple)):
        table = [rational(v) for v in spec]

        def tabulated(n, _t=table, _name=name):
            if n < 0 or n >= len(_t):
                raise SchemeIndexError(_name, n, len(_t))
            return _t[n]

        return tabulated
    value = rational(spec)

    def constant(n, _v=value):
        return _v

    return constant


def _node_value(v):
    """Coerce a node spec entry to Fraction or GaussianRational."""
    if isinstance(v, GaussianRational):
        return v.simplify()
    if isinstance(v, (list, tuple)) and len(v) == 2:
        return GaussianRational(rational(v[0]), rational(v[1])).simplify()
    return rational(v)


class CoefficientScheme:
    """Immutable bundle of recurrence data (rho_n, c_n, lambda_n, W_n)."""

    def __init__(self, rho, c, lam, kind, omega=None, nodes=None, raw=None):
        self.rho = as_coeff_fn(rho, "rho")
        self.c = as_coeff_fn(c, "c")
        self.lam = as_coeff_fn(lam, "lambda")
        if kind not in ("general", "special", "oprl"):
            raise ValueError("unknown scheme kind %r" % (kind,))
        self.kind = kind
        self.omega = rational(omega) if omega is not None else None
        self._nodes = nodes
        self._raw = raw  # serializable specs, kept when constructed from data
        if kind == "special":
            if self.omega is None or self.omega == 0:
                raise ValueError("special form requires a nonzero omega")
        if kind == "general" and nodes is None:
            raise ValueError("general form requires a nodes function")

    # --- constructors ---------------------------------------------------
    @staticmethod
    def special(rho, c, lam, omega):
        return CoefficientScheme(rho, c, lam, "special", omega=omega,
                                 raw={"rho": rho, "c": c, "lambda": lam, "omega": omega})

    @staticmethod
    def general(rho, c, lam, nodes):
        """nodes: callable n -> (a_n, b_n), or a list of pairs."""
        if callable(nodes):
            fn = nodes
            raw_nodes = None
        else:
            table = [(_node_value(a), _node_value(b)) for a, b in nodes]

            def fn(n, _t=table):
                if n < 0 or n >= len(_t):
                    raise SchemeIndexError("nodes", n, len(_t))
                return _t[n]

            raw_nodes = nodes
        return CoefficientScheme(rho, c, lam, "general", nodes=fn,
                                 raw={"rho": rho, "c": c, "lambda": lam, "nodes": raw_nodes})

    @staticmethod
    def oprl(rho, c, lam):
        return CoefficientScheme(rho, c, lam, "oprl",
                                 raw={"rho": rho, "c": c, "lambda": lam})

    # --- weight factor ----------------------------------------------------
    def nodes(self, n):
        """(a_n, b_n) as exact scalars; the special form derives them."""
        if self.kind == "special":
            i = GaussianRational.i()
            return (i * self.omega, -(i * self.omega))
        if self.kind == "oprl":
            raise ValueError("oprl schemes have no quadratic nodes")
        a, b = self._nodes(n)
        return (_node_value(a), _node_value(b))

    def weight_poly(self, n):
        """W_n(z) as a Poly: (z-a_n)(z-b_n), z^2+omega^2, or 1."""
        if self.kind == "oprl":
            return Poly.one()
        if self.kind == "special":
            return Poly((self.omega * self.omega, 0, 1))
        a, b = self.nodes(n)
        return Poly((a * b, -(a + b), 1))

    def weight_at(self, n, z):
        """W_n evaluated at a scalar (cheaper than building the Poly)."""
        if self.kind == "oprl":
            return Fraction(1) if not isinstance(z, (float, complex)) else 1.0
        if self.kind == "special":
            w2 = self.omega * self.omega
            if isinstance(z, (float, complex)):
                return z * z + float(w2)
            from .exact import simplify_scalar
            return simplify_scalar(z * z + w2)
        a, b = self.nodes(n)
        from .exact import simplify_scalar
        return simplify_scalar((z - a) * (z - b))

    # --- serialization ------------------------------------------------
    def to_dict(self):
        if self._raw is None:
            raise ValueError("rule-based schemes are not serializable")

        def enc(spec):
            if callable(spec):
                raise ValueError("rule-based coefficients are not serializable")
            if isinstance(spec, (list, tuple)):
                return [format_rational(rational(v)) for v in spec]
            return format_rational(rational(spec))

        out = {"rho": enc(self._raw["rho"]), "c": enc(self._raw["c"]),
               "lambda": enc(self._raw["lambda"])}
        if self.kind == "special":
            out["omega"] = format_rational(self.omega)
        elif self.kind == "general":
            node_spec = self._raw.get("nodes")
            if node_spec is None:
                raise ValueError("rule-based nodes are not serializable")
            pairs = []
            for a, b in node_spec:
                pairs.append([_enc_node(a), _enc_node(b)])
            out["nodes"] = pairs
        else:
            out["kind"] = "oprl"
        return out

    @staticmethod
    def from_dict(data):
        data = dict(data)
        if "omega" in data and data["omega"] is not None:
            return CoefficientScheme.special(data["rho"], data["c"], data["lambda"],
                                             data["omega"])
        if "nodes" in data and data["nodes"] is not None:
            return CoefficientScheme.general(data["rho"], data["c"], data["lambda"],
                                             data["nodes"])
        return CoefficientScheme.oprl(data["rho"], data["c"], data["lambda"])

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True)

    @staticmethod
    def from_json(text):
        return CoefficientScheme.from_dict(json.loads(text))


def _enc_node(v):
    value = _node_value(v)
    if isinstance(value, GaussianRational):
        return [format_rational(value.re), format_rational(value.im)]
    return format_rational(value)


def cauchy_scheme():
    """The worked-example scheme: rho=1, c=0, lambda=1/4, omega=1.

    Its first-kind polynomials are orthogonal for the Cauchy density
    1/(pi*(1+x^2)); nodes are cot(j*pi/(n+1)) and calibrated weights 1/(n+1).
    """
    return CoefficientScheme.special(1, 0, Fraction(1, 4), 1)


class Perturbation:
    """Optional co-recursion (k, mu) and co-dilation (kp, nu) records."""

    __slots__ = ("k", "mu", "kp", "nu")

    def __init__(self, k=None, mu=None, kp=None, nu=None):
        if (k is None) != (mu is None):
            raise PerturbationError("co-recursion needs both k and mu")
        if (kp is None) != (nu is None):
            raise PerturbationError("co-dilation needs both kp and nu")
        if k is not None:
            if k < 0:
                raise PerturbationError("co-recursion index k must be >= 0")
            mu = rational(mu)
        if kp is not None:
            if kp < 1:
                raise PerturbationError(
                    "co-dilation index kp must be >= 1 (lambda_n exists for n >= 1)")
            nu = rational(nu)
            if nu <= 0:
                raise PerturbationError("co-dilation factor nu must be positive")
        self.k = k
        self.mu = mu
        self.kp = kp
        self.nu = nu

    # --- constructors ---------------------------------------------------
    @staticmethod
    def none():
        return Perturbation()

    @staticmethod
    def corec(k, mu):
        return Perturbation(k=k, mu=mu)

    @staticmethod
    def codil(kp, nu):
        return Perturbation(kp=kp, nu=nu)

    @staticmethod
    def both(k, mu, kp, nu):
        return Perturbation(k=k, mu=mu, kp=kp, nu=nu)

    # --- queries ----------------------------------------------------------
    def is_identity(self):
        return (self.k is None or self.mu == 0) and (self.kp is None or self.nu == 1)

    def max_level(self):
        """Largest perturbed recurrence index, or -1 when empty."""
        levels = [lvl for lvl in (self.k, self.kp) if lvl is not None]
        return max(levels) if levels else -1

    def center(self, scheme, n):
        """Effective center c_n (+ mu at n = k)."""
        c = scheme.c(n)
        if self.k is not None and n == self.k:
            c = c + self.mu
        return c

    def coefficient(self, scheme, n):
        """Effective lambda_n (* nu at n = kp)."""
        lam = scheme.lam(n)
        if self.kp is not None and n == self.kp:
            lam = lam * self.nu
        return lam

    def corec_only(self):
        """The co-recursion half alone (identity if absent)."""
        return Perturbation(k=self.k, mu=self.mu)

    def codil_only(self):
        return Perturbation(kp=self.kp, nu=self.nu)

    # --- serialization ------------------------------------------------
    def to_dict(self):
        out = {}
        if self.k is not None:
            out["corec"] = {"k": self.k, "mu": format_rational(self.mu)}
        if self.kp is not None:
            out["codil"] = {"kp": self.kp, "nu": format_rational(self.nu)}
        return out

    @staticmethod
    def from_dict(data):
        k = mu = kp = nu = None
        if data.get("corec"):
            k = int(data["corec"]["k"])
            mu = data["corec"]["mu"]
        if data.get("codil"):
            kp = int(data["codil"]["kp"])
            nu = data["codil"]["nu"]
        return Perturbation(k=k, mu=mu, kp=kp, nu=nu)

    def __eq__(self, other):
        if not isinstance(other, Perturbation):
            return NotImplemented
        return (self.k, self.mu, self.kp, self.nu) == (other.k, other.mu, other.kp, other.nu)

    def __hash__(self):
        return hash((self.k, self.mu, self.kp, self.nu))

    def __repr__(self):
        bits = []
        if self.k is not None:
            bits.append("k=%d, mu=%s" % (self.k, self.mu))
        if self.kp is not None:
            bits.append("kp=%d, nu=%s" % (self.kp, self.nu))
        return "Perturbation(%s)" % ", ".join(bits)
