#include "shlie/torus.hpp"

#include <sstream>

namespace shlie {

TrigPoly TrigPoly::constant(const Rat& c) {
  TrigPoly f;
  f.add_term(0, 0, c, Rat(0));
  return f;
}

TrigPoly TrigPoly::coskl(int k, int l, const Rat& c) {
  TrigPoly f;
  f.add_term(k, l, c, Rat(0));
  return f;
}

TrigPoly TrigPoly::sinkl(int k, int l, const Rat& c) {
  TrigPoly f;
  f.add_term(k, l, Rat(0), c);
  return f;
}

void TrigPoly::add_term(int k, int l, const Rat& c, const Rat& s) {
  Rat cc = c, ss = s;
  if (k < 0 || (k == 0 && l < 0)) {
    // cos(-t) = cos(t), sin(-t) = -sin(t)
    k = -k;
    l = -l;
    ss = -ss;
  }
  if (k == 0 && l == 0) ss = Rat(0);  // sin(0) = 0
  auto it = terms.find(Freq{k, l});
  if (it == terms.end()) {
    if (cc.is_zero() && ss.is_zero()) return;
    terms.emplace(Freq{k, l}, std::make_pair(cc, ss));
    return;
  }
  it->second.first = it->second.first + cc;
  it->second.second = it->second.second + ss;
  if (it->second.first.is_zero() && it->second.second.is_zero())
    terms.erase(it);
}

TrigPoly TrigPoly::dx() const {
  // d/dx [c cos(kx+ly) + s sin(kx+ly)] = sk cos(kx+ly) - ck sin(kx+ly)
  TrigPoly out;
  for (const auto& [f, cs] : terms)
    out.add_term(f.k, f.l, Rat(f.k) * cs.second, Rat(-f.k) * cs.first);
  return out;
}

TrigPoly TrigPoly::dy() const {
  TrigPoly out;
  for (const auto& [f, cs] : terms)
    out.add_term(f.k, f.l, Rat(f.l) * cs.second, Rat(-f.l) * cs.first);
  return out;
}

Rat TrigPoly::mean() const {
  auto it = terms.find(Freq{0, 0});
  return it == terms.end() ? Rat(0) : it->second.first;
}

std::string TrigPoly::str() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const Rat& coeff, const char* kind, const Freq& f) {
    if (coeff.is_zero()) return;
    if (!first) os << " + ";
    first = false;
    os << coeff.str();
    if (f.k != 0 || f.l != 0)
      os << "*" << kind << "(" << f.k << "x" << (f.l < 0 ? "" : "+") << f.l
         << "y)";
  };
  for (const auto& [f, cs] : terms) {
    emit(cs.first, "cos", f);
    emit(cs.second, "sin", f);
  }
  return os.str();
}

TrigPoly operator+(const TrigPoly& a, const TrigPoly& b) {
  TrigPoly out = a;
  for (const auto& [f, cs] : b.terms)
    out.add_term(f.k, f.l, cs.first, cs.second);
  return out;
}

TrigPoly operator-(const TrigPoly& a, const TrigPoly& b) {
  TrigPoly out = a;
  for (const auto& [f, cs] : b.terms)
    out.add_term(f.k, f.l, -cs.first, -cs.second);
  return out;
}

TrigPoly operator-(const TrigPoly& a) { return Rat(-1) * a; }

TrigPoly operator*(const Rat& c, const TrigPoly& a) {
  TrigPoly out;
  if (c.is_zero()) return out;
  for (const auto& [f, cs] : a.terms)
    out.add_term(f.k, f.l, c * cs.first, c * cs.second);
  return out;
}

TrigPoly operator*(const TrigPoly& a, const TrigPoly& b) {
  // Product-to-sum on each pair of basis waves, with u = (k1+k2, l1+l2)
  // and v = (k1-k2, l1-l2):
  //   cos cos = (cos v + cos u)/2      sin sin = (cos v - cos u)/2
  //   sin cos = (sin u + sin v)/2      cos sin = (sin u - sin v)/2
  TrigPoly out;
  const Rat half(1, 2);
  for (const auto& [fa, csa] : a.terms)
    for (const auto& [fb, csb] : b.terms) {
      int uk = fa.k + fb.k, ul = fa.l + fb.l;
      int vk = fa.k - fb.k, vl = fa.l - fb.l;
      const Rat& ca = csa.first;
      const Rat& sa = csa.second;
      const Rat& cb = csb.first;
      const Rat& sb = csb.second;
      Rat cacb = half * ca * cb, sasb = half * sa * sb;
      Rat sacb = half * sa * cb, casb = half * ca * sb;
      out.add_term(vk, vl, cacb + sasb, sacb - casb);
      out.add_term(uk, ul, cacb - sasb, sacb + casb);
    }
  return out;
}

bool OneForm::closed() const { return curl(*this).is_zero(); }

OneForm operator+(const OneForm& a, const OneForm& b) {
  return OneForm{a.P + b.P, a.Q + b.Q};
}

OneForm operator-(const OneForm& a, const OneForm& b) {
  return OneForm{a.P - b.P, a.Q - b.Q};
}

OneForm operator*(const Rat& c, const OneForm& a) {
  return OneForm{c * a.P, c * a.Q};
}

OneForm operator*(const TrigPoly& f, const OneForm& a) {
  return OneForm{f * a.P, f * a.Q};
}

VectorField operator+(const VectorField& a, const VectorField& b) {
  return VectorField{a.A + b.A, a.B + b.B};
}

VectorField operator-(const VectorField& a, const VectorField& b) {
  return VectorField{a.A - b.A, a.B - b.B};
}

VectorField operator*(const Rat& c, const VectorField& a) {
  return VectorField{c * a.A, c * a.B};
}

VectorField operator*(const TrigPoly& f, const VectorField& a) {
  return VectorField{f * a.A, f * a.B};
}

OneForm d(const TrigPoly& f) { return OneForm{f.dx(), f.dy()}; }

TrigPoly curl(const OneForm& a) { return a.Q.dx() - a.P.dy(); }

TrigPoly apply(const VectorField& v, const TrigPoly& f) {
  return v.A * f.dx() + v.B * f.dy();
}

TrigPoly interior(const VectorField& v, const OneForm& a) {
  return v.A * a.P + v.B * a.Q;
}

VectorField vf_bracket(const VectorField& v, const VectorField& w) {
  return VectorField{apply(v, w.A) - apply(w, v.A),
                     apply(v, w.B) - apply(w, v.B)};
}

OneForm lie_form(const VectorField& v, const OneForm& a) {
  // i_V (c dx^dy) = c (A dy - B dx) for the area-form coefficient c.
  TrigPoly c = curl(a);
  OneForm ivda{-(v.B * c), v.A * c};
  return d(interior(v, a)) + ivda;
}

}  // namespace shlie
