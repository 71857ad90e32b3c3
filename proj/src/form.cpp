#include "germtype/form.hpp"

namespace germtype {

std::string form_tag_name(FormTag t) {
  switch (t) {
    case FormTag::General: return "general";
    case FormTag::Standard: return "standard";
    case FormTag::Model: return "model";
  }
  return "?";
}

namespace {

Exponent drop_w(const Exponent& a, int nz) { return Exponent(a.begin(), a.begin() + nz); }

}  // namespace

HermitianJet z_part(const DefiningFunction& def) {
  HermitianJet F;
  F.nvars = def.nvars_z;
  F.truncation = def.jet.truncation;
  F.complete = def.jet.complete;
  int nz = def.nvars_z;
  int wi = def.w_index();
  for (auto& [p, c] : def.jet.coeffs) {
    if (def.has_w && (p.alpha[wi] != 0 || p.beta[wi] != 0)) continue;
    F.coeffs[ExponentPair{drop_w(p.alpha, nz), drop_w(p.beta, nz)}] = c;
  }
  for (auto& [k, t] : def.jet.tails) {
    if (k >= nz) continue;
    F.tails[k] = t;
  }
  return F;
}

FormInfo recognize_form(const DefiningFunction& def) {
  const HermitianJet& r = def.jet;
  int nv = r.nvars;

  // gradient at 0: linear-term coefficients
  bool grad = false;
  for (auto& [p, c] : r.coeffs)
    if (p.order() == 1) grad = true;
  for (auto& [k, t] : r.tails)
    if (t.defines_values() && t.from == 1) grad = true;
  if (!grad) throw Error("NotAHypersurface", "gradient of the jet vanishes at 0");

  FormInfo info;
  info.z_part.nvars = def.nvars_z;
  info.r1.nvars = def.nvars_z;
  if (!def.has_w) {
    info.tag = FormTag::General;
    info.note = "no distinguished variable w";
    info.z_part = z_part(def);
    return info;
  }

  int nz = def.nvars_z;
  int wi = def.w_index();

  bool w_coeff_is_one = r.coeff(ExponentPair{unit_exp(nv, wi), Exponent(nv, 0)}) == GaussianRational(1);

  HermitianJet F = z_part(def);
  F.truncation = r.truncation;
  F.complete = r.complete;

  bool f_ok = true;
  for (auto& [p, c] : F.coeffs)
    if (p.order() <= 1) f_ok = false;  // F(0)=0 and grad F(0)=0

  // w-linear coefficient jet H (z-dependent), from bidegree (1,0) terms
  std::map<ExponentPair, GaussianRational> H;
  bool higher = false;
  for (auto& [p, c] : r.coeffs) {
    int a = p.alpha[wi], b = p.beta[wi];
    if (a + b == 0) continue;
    if (a == 1 && b == 0) {
      H[ExponentPair{drop_w(p.alpha, nz), drop_w(p.beta, nz)}] = c;
      continue;
    }
    if (a == 0 && b == 1) continue;  // conjugate side of H
    higher = true;
  }

  // R1 = 2i (H - 1); real-valued iff Hermitian symmetric
  std::map<ExponentPair, GaussianRational> R1;
  for (auto& [p, c] : H) {
    GaussianRational g = c;
    if (exp_is_zero(p.alpha) && exp_is_zero(p.beta)) g -= GaussianRational(1);
    if (g.is_zero()) continue;
    R1[p] = g * GaussianRational(Rat(0), Rat(2));
  }
  bool r1_real = true;
  for (auto& [p, c] : R1) {
    auto it = R1.find(p.swapped());
    if (it == R1.end() || it->second != c.conj()) r1_real = false;
  }
  bool r1_zero_at_origin = !R1.count(ExponentPair{Exponent(nz, 0), Exponent(nz, 0)});

  // R2: bidegree >= 2 part must vanish to second order in Im(w).
  // Substitute w = u + iv and require the v^0 and v^1 slices to vanish.
  bool r2_ok = true;
  if (higher) {
    std::map<std::pair<ExponentPair, long>, GaussianRational> slice0, slice1;
    for (auto& [p, c] : r.coeffs) {
      int a = p.alpha[wi], b = p.beta[wi];
      if (a + b < 2) continue;
      ExponentPair zp{drop_w(p.alpha, nz), drop_w(p.beta, nz)};
      // (u+iv)^a (u-iv)^b: v^0 coefficient is u^{a+b}; v^1 coefficient is
      // u^{a+b-1} * i * (a-b)
      auto add = [&](auto& slice, long udeg, GaussianRational val) {
        auto key = std::make_pair(zp, udeg);
        auto it = slice.find(key);
        if (it == slice.end()) {
          if (!val.is_zero()) slice[key] = val;
        } else {
          it->second += val;
          if (it->second.is_zero()) slice.erase(it);
        }
      };
      add(slice0, a + b, c);
      GaussianRational v1 = c * GaussianRational(Rat(0), Rat(a - b));
      add(slice1, a + b - 1, v1);
    }
    r2_ok = slice0.empty() && slice1.empty();
  }

  info.z_part = F;
  HermitianJet r1jet;
  r1jet.nvars = nz;
  r1jet.complete = r.complete;
  r1jet.truncation = r.truncation;
  for (auto& [p, c] : R1) r1jet.coeffs[p] = c;
  info.r1 = r1jet;

  if (!w_coeff_is_one || !f_ok || !r1_real || !r1_zero_at_origin || !r2_ok) {
    info.tag = FormTag::General;
    info.note = !w_coeff_is_one ? "coefficient of w is not exactly 1"
                : !f_ok         ? "w-free part has constant or linear terms"
                : !r1_real      ? "w-linear part is not R1*Im(w) with real R1"
                                : "terms of higher w-degree are not O(Im(w)^2)";
    return info;
  }
  info.tag = (R1.empty() && !higher) ? FormTag::Model : FormTag::Standard;
  return info;
}

}  // namespace germtype
