#include "linrel/generator.hpp"

#include <algorithm>

namespace linrel {

namespace {

Index draw_in_range(Rng& rng, Index lo, Index hi) {
  if (lo > hi) throw PreconditionError("generator constraints are infeasible");
  return lo + static_cast<Index>(
                  rng.uniform_index(static_cast<std::uint64_t>(hi - lo + 1)));
}

// Resolve (domain_dim, mulpart_dim) against the optional constraints.
// max_k caps the multivalued part as a function of the domain dimension
// (m for general relations, n - d for Hermitian ones).
struct ResolvedDims {
  Index d = 0;
  Index k = 0;
};

ResolvedDims resolve_dims(Rng& rng, const GenOptions& opts) {
  const Index n = opts.n;
  const Index m = opts.m;
  std::optional<Index> d = opts.domain_dim;
  std::optional<Index> k = opts.mulpart_dim;
  if (opts.graph_dim) {
    if (d && k) {
      if (*d + *k != *opts.graph_dim) {
        throw PreconditionError("graph, domain and mulpart dimensions are inconsistent");
      }
    } else if (d) {
      k = *opts.graph_dim - *d;
    } else if (k) {
      d = *opts.graph_dim - *k;
    } else {
      const Index g = *opts.graph_dim;
      const Index klo = std::max<Index>(0, g - n);
      const Index khi = std::min(g, opts.hermitian ? n : m);
      // In the Hermitian case the cap k <= n - d = n - (g - k) is automatic
      // once g <= n; a larger g is infeasible and caught below.
      k = draw_in_range(rng, klo, khi);
      d = g - *k;
    }
  }
  ResolvedDims out;
  if (opts.hermitian) {
    out.d = d ? *d : draw_in_range(rng, 0, k ? n - *k : n);
    out.k = k ? *k : draw_in_range(rng, 0, n - out.d);
    if (out.d < 0 || out.k < 0 || out.d + out.k > n) {
      throw PreconditionError("hermitian generator needs domain + mulpart <= n");
    }
  } else {
    out.d = d ? *d : draw_in_range(rng, 0, n);
    out.k = k ? *k : draw_in_range(rng, 0, m);
    if (out.d < 0 || out.d > n || out.k < 0 || out.k > m) {
      throw PreconditionError("requested dimensions exceed the ambient spaces");
    }
  }
  return out;
}

LinearRelation assemble(const Matrix& dom, const Matrix& mul, const Matrix& val,
                        Index n, Index m, Field field, double tol) {
  const Index d = dom.cols();
  const Index k = mul.cols();
  Matrix cols(n + m, d + k);
  cols.setZero();
  cols.block(0, 0, n, d) = dom;
  cols.block(n, 0, m, d) = val;
  cols.block(n, d, m, k) = mul;
  return LinearRelation(n, m, Subspace::span(cols, n + m, field, tol, 1.0));
}

}  // namespace

LinearRelation gen_relation(Rng& rng, const GenOptions& opts) {
  if (opts.n < 1 || opts.m < 1) {
    throw PreconditionError("generator needs positive space dimensions");
  }
  if (opts.hermitian && opts.n != opts.m) {
    throw PreconditionError("hermitian generator needs n == m");
  }
  const ResolvedDims dims = resolve_dims(rng, opts);
  const Index n = opts.n;
  const Index m = opts.m;

  if (opts.hermitian) {
    // Domain and multivalued part are drawn orthogonal to each other, the
    // action is D H + M R with H Hermitian in domain coordinates.
    const Matrix frame = rng.random_orthonormal(n, dims.d + dims.k, opts.field);
    const Matrix dom = frame.leftCols(dims.d);
    const Matrix mul = frame.rightCols(dims.k);
    const Matrix raw = rng.gaussian_matrix(dims.d, dims.d, opts.field);
    const Matrix h = 0.5 * (raw + raw.adjoint().eval());
    const Matrix r = rng.gaussian_matrix(dims.k, dims.d, opts.field);
    const Matrix val = dom * h + mul * r;
    return assemble(dom, mul, val, n, n, opts.field, opts.tol);
  }

  const Matrix dom = rng.random_orthonormal(n, dims.d, opts.field);
  const Matrix mul = rng.random_orthonormal(m, dims.k, opts.field);
  const Matrix val = rng.gaussian_matrix(m, dims.d, opts.field);
  return assemble(dom, mul, val, n, m, opts.field, opts.tol);
}

LinearRelation gen_related(Rng& rng, const LinearRelation& base,
                           const RelatedOptions& opts) {
  const Index n = base.n();
  const Index ms = opts.m.value_or(base.m());
  if (ms < 1) throw PreconditionError("generator needs positive space dimensions");
  const bool ties_mulpart = opts.mulpart != MulpartLink::free;
  if (ties_mulpart && ms != base.m()) {
    throw PreconditionError("mulpart links require matching right-hand spaces");
  }
  if (opts.field != base.field()) {
    throw PreconditionError("companion must use the base relation's field");
  }
  const double tol = opts.tol >= 0.0 ? opts.tol : base.tol();

  const Subspace dom_t = domain(base);
  const Index dt = dom_t.dim();

  Matrix dom;
  switch (opts.domain) {
    case DomainLink::free: {
      const Index d = opts.domain_dim ? *opts.domain_dim
                                      : draw_in_range(rng, 0, n);
      dom = rng.random_orthonormal(n, d, opts.field);
      break;
    }
    case DomainLink::subset: {
      const Index d = opts.domain_dim ? *opts.domain_dim
                                      : draw_in_range(rng, 0, dt);
      if (d > dt) throw PreconditionError("subset domain cannot exceed the base domain");
      dom = dom_t.basis() * rng.random_orthonormal(dt, d, opts.field);
      break;
    }
    case DomainLink::superset:
    case DomainLink::proper_superset: {
      const Index lo = opts.domain == DomainLink::proper_superset ? dt + 1 : dt;
      if (lo > n) {
        throw PreconditionError("cannot strictly extend a full domain");
      }
      const Index d = opts.domain_dim ? *opts.domain_dim
                                      : draw_in_range(rng, lo, n);
      if (d < lo || d > n) {
        throw PreconditionError("superset domain dimension out of range");
      }
      const Subspace comp = complement(dom_t);
      const Matrix extra =
          comp.basis() * rng.random_orthonormal(n - dt, d - dt, opts.field);
      Matrix stacked(n, d);
      stacked << dom_t.basis(), extra;
      dom = stacked;
      break;
    }
    case DomainLink::same:
      dom = dom_t.basis();
      break;
  }

  const Subspace mul_t = mulpart(base);
  const Index kt = mul_t.dim();

  Matrix mul;
  switch (opts.mulpart) {
    case MulpartLink::free: {
      const Index k = opts.mulpart_dim ? *opts.mulpart_dim
                                       : draw_in_range(rng, 0, ms);
      mul = rng.random_orthonormal(ms, k, opts.field);
      break;
    }
    case MulpartLink::contains: {
      const Index k = opts.mulpart_dim ? *opts.mulpart_dim
                                       : draw_in_range(rng, kt, ms);
      if (k < kt || k > ms) {
        throw PreconditionError("containing mulpart dimension out of range");
      }
      const Subspace comp = complement(mul_t);
      const Matrix extra =
          comp.basis() * rng.random_orthonormal(ms - kt, k - kt, opts.field);
      Matrix stacked(ms, k);
      stacked << mul_t.basis(), extra;
      mul = stacked;
      break;
    }
    case MulpartLink::inside: {
      const Index k = opts.mulpart_dim ? *opts.mulpart_dim
                                       : draw_in_range(rng, 0, kt);
      if (k > kt) throw PreconditionError("inner mulpart cannot exceed the base mulpart");
      mul = mul_t.basis() * rng.random_orthonormal(kt, k, opts.field);
      break;
    }
    case MulpartLink::avoid: {
      const Subspace comp = complement(mul_t);
      const Index k = opts.mulpart_dim ? *opts.mulpart_dim
                                       : draw_in_range(rng, 0, ms - kt);
      if (k > ms - kt) {
        throw PreconditionError("avoiding mulpart does not fit in the complement");
      }
      mul = comp.basis() * rng.random_orthonormal(ms - kt, k, opts.field);
      break;
    }
    case MulpartLink::same:
      mul = mul_t.basis();
      break;
  }

  const Matrix val = rng.gaussian_matrix(ms, dom.cols(), opts.field);
  return assemble(dom, mul, val, n, ms, opts.field, tol);
}

}  // namespace linrel
