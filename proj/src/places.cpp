#include "plucker/places.hpp"

#include <algorithm>
#include <deque>

namespace plucker::alg {

Place Place::locus(const UniPoly& p) {
  if (p.isZero() || p.isConstant())
    fail(Errc::ZeroInput, "locus of a constant polynomial");
  UniPoly m = p.monic();
  if (m.degreeOrThrow() == 1) {
    // z + c0  ->  root -c0
    return finite(-m.coeff(0));
  }
  if (!gcd(m, m.derivative()).isConstant())
    fail(Errc::BadParameters, "locus polynomial must be squarefree");
  return Place(AlgebraicLocus{std::move(m)});
}

int Place::degree() const {
  if (isLocus()) return locusPoly().degreeOrThrow();
  return 1;
}

namespace {
int kindRank(const Place& p) {
  if (p.isFinite()) return 0;
  if (p.isLocus()) return 1;
  return 2;
}
}  // namespace

int Place::compare(const Place& x, const Place& y) {
  int rx = kindRank(x), ry = kindRank(y);
  if (rx != ry) return rx < ry ? -1 : 1;
  if (x.isFinite()) return FieldElem::compareLex(x.finiteValue(), y.finiteValue());
  if (x.isInfinity()) return 0;
  const UniPoly &px = x.locusPoly(), &py = y.locusPoly();
  if (px.degreeOrThrow() != py.degreeOrThrow())
    return px.degreeOrThrow() < py.degreeOrThrow() ? -1 : 1;
  for (int i = px.degreeOrThrow(); i >= 0; --i) {
    int c = FieldElem::compareLex(px.coeff(i), py.coeff(i));
    if (c != 0) return c;
  }
  return 0;
}

std::string Place::toString() const {
  if (isInfinity()) return "inf";
  if (isFinite()) return finiteValue().toString();
  return "{" + locusPoly().toString() + " = 0}";
}

Divisor Divisor::single(const Place& p, long mult) {
  Divisor d;
  d.add(p, mult);
  return d;
}

long Divisor::multiplicity(const Place& p) const {
  auto it = m_.find(p);
  return it == m_.end() ? 0 : it->second;
}

long Divisor::degree() const {
  long d = 0;
  for (const auto& [p, m] : m_) d += m * p.degree();
  return d;
}

void Divisor::add(const Place& p, long mult) {
  if (mult == 0) return;
  auto [it, fresh] = m_.emplace(p, mult);
  if (!fresh) {
    it->second += mult;
    if (it->second == 0) m_.erase(it);
  }
}

Divisor operator+(const Divisor& x, const Divisor& y) {
  Divisor r(x);
  for (const auto& [p, m] : y.m_) r.add(p, m);
  return r;
}

Divisor operator-(const Divisor& x, const Divisor& y) {
  Divisor r(x);
  for (const auto& [p, m] : y.m_) r.add(p, -m);
  return r;
}

Divisor Divisor::operator*(long k) const {
  Divisor r;
  if (k == 0) return r;
  for (const auto& [p, m] : m_) r.add(p, m * k);
  return r;
}

namespace {

// Re-express a divisor over a coprime basis containing a refinement of all
// its loci.  Every root of a locus has the same multiplicity, so a locus
// distributes to each basis element dividing it with unchanged multiplicity.
Divisor refineOver(const Divisor& d, const std::vector<UniPoly>& basis) {
  Divisor out;
  for (const auto& [p, m] : d.terms()) {
    if (!p.isLocus()) {
      out.add(p, m);
      continue;
    }
    const UniPoly& q = p.locusPoly();
    int covered = 0;
    for (const UniPoly& b : basis) {
      if (divmod(q, b).second.isZero()) {
        out.add(Place::locus(b), m);
        covered += b.degreeOrThrow();
      }
    }
    if (covered != q.degreeOrThrow())
      fail(Errc::Internal, "divisor refinement lost degree");
  }
  return out;
}

}  // namespace

bool operator==(const Divisor& x, const Divisor& y) {
  if (x.m_ == y.m_) return true;
  // The refinement basis must see the finite points as linear factors too,
  // or a locus on one side never splits against its roots on the other.
  std::vector<UniPoly> polys;
  bool anyLocus = false;
  for (const Divisor* d : {&x, &y}) {
    for (const auto& [p, m] : d->m_) {
      if (p.isLocus()) {
        polys.push_back(p.locusPoly());
        anyLocus = true;
      } else if (p.isFinite()) {
        polys.push_back(
            UniPoly(std::vector<FieldElem>{-p.finiteValue(), FieldElem(1)}));
      }
    }
  }
  if (!anyLocus) return false;
  std::vector<UniPoly> basis = coprimeSquarefreeBasis(polys);
  return refineOver(x, basis).m_ == refineOver(y, basis).m_;
}

std::string Divisor::toString() const {
  if (m_.empty()) return "0";
  std::string out;
  for (const auto& [p, m] : m_) {
    std::string term = (m == 1 ? "" : std::to_string(m) + "*") + "(" + p.toString() + ")";
    if (out.empty())
      out = term;
    else
      out += " + " + term;
  }
  return out;
}

long valuation(const UniPoly& h, const Place& p) {
  if (h.isZero()) fail(Errc::ZeroInput, "valuation of the zero polynomial");
  if (p.isInfinity()) return -h.degreeOrThrow();
  if (p.isFinite()) {
    const FieldElem& c = p.finiteValue();
    UniPoly cur = h;
    long v = 0;
    UniPoly lin(std::vector<FieldElem>{-c, FieldElem(1)});
    while (cur.eval(c).isZero()) {
      cur = divideExact(cur, lin);
      ++v;
    }
    return v;
  }
  const UniPoly& q = p.locusPoly();
  UniPoly cur = h;
  long v = 0;
  for (;;) {
    auto [quo, rem] = divmod(cur, q);
    if (!rem.isZero()) break;
    cur = quo;
    ++v;
  }
  // Uniformity across the roots of q: after stripping q^v, no root of q may
  // remain a root of the cofactor.  (This also catches partial overlap when
  // v = 0.)  Callers using bases from uniformBasisFor never trip this.
  if (!cur.isConstant() && !gcd(cur, q).isConstant())
    fail(Errc::NonUniformLocus,
         "valuation not uniform across roots of " + q.toString());
  return v;
}

long valuation(const RatFunction& f, const Place& p) {
  if (f.isZero()) fail(Errc::ZeroInput, "valuation of the zero function");
  if (p.isInfinity())
    return static_cast<long>(f.den().degreeOrThrow()) - f.num().degreeOrThrow();
  return valuation(f.num(), p) - valuation(f.den(), p);
}

namespace {

// gcd-refinement of a set of monic squarefree polynomials into a pairwise
// coprime set generating the same products.  Degrees strictly drop at every
// split, so the worklist terminates.
std::vector<UniPoly> refineCoprime(std::deque<UniPoly> work) {
  std::vector<UniPoly> basis;
  while (!work.empty()) {
    UniPoly f = std::move(work.front());
    work.pop_front();
    if (f.isZero() || f.isConstant()) continue;
    bool split = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      UniPoly g = gcd(f, basis[i]);
      if (g.isConstant()) continue;
      UniPoly b = basis[i];
      basis.erase(basis.begin() + static_cast<long>(i));
      work.push_back(divideExact(b, g).monic());
      work.push_back(g);
      work.push_back(divideExact(f, g).monic());
      split = true;
      break;
    }
    if (!split) basis.push_back(f.monic());
  }
  std::sort(basis.begin(), basis.end(), [](const UniPoly& x, const UniPoly& y) {
    return Place::compare(Place::locus(x), Place::locus(y)) < 0;
  });
  return basis;
}

}  // namespace

std::vector<UniPoly> coprimeSquarefreeBasis(const std::vector<UniPoly>& polys) {
  std::deque<UniPoly> work;
  for (const UniPoly& p : polys) {
    if (p.isZero()) fail(Errc::ZeroInput, "basis of the zero polynomial");
    if (!p.isConstant()) work.push_back(p.squarefreePart());
  }
  return refineCoprime(std::move(work));
}

std::vector<UniPoly> uniformBasisFor(const std::vector<UniPoly>& polys) {
  std::deque<UniPoly> work;
  for (const UniPoly& p : polys) {
    if (p.isZero() || p.isConstant()) continue;
    for (const auto& [factor, mult] : p.squarefreeDecomposition())
      work.push_back(factor);
  }
  return refineCoprime(std::move(work));
}

Divisor divisorOfZeros(const UniPoly& h) {
  if (h.isZero()) fail(Errc::ZeroInput, "divisor of zeros of the zero polynomial");
  Divisor d;
  for (const auto& [factor, mult] : h.squarefreeDecomposition())
    d.add(Place::locus(factor), mult);
  return d;
}

std::vector<Place> placesOf(const std::vector<UniPoly>& basis) {
  std::vector<Place> out;
  out.reserve(basis.size());
  for (const UniPoly& b : basis) out.push_back(Place::locus(b));
  return out;
}

}  // namespace plucker::alg
