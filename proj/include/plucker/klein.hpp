#pragma once

#include <array>
#include <variant>

#include "plucker/contact.hpp"
#include "plucker/curve.hpp"
#include "plucker/ratfunc.hpp"

namespace plucker::klein {

using alg::FieldElem;
using alg::MatF;
using alg::RatFunction;
using alg::UniPoly;
using contact::SymplecticForm;
using curves::ProjectiveCurve;

// The 5-space W = beta-perp inside the bivectors, carrying the inner product
// <w, w'> = Omega(w ^ w') with Omega = (1/2) beta ^ beta read through the
// fixed pairing.  basis columns are bivectors in lex pair coordinates; each
// column is supported alone on its freeRows entry, which is how W-coordinates
// of a bivector are read off.
struct WModel {
  SymplecticForm beta;
  MatF basis;                   // 6 x 5
  std::array<int, 5> freeRows;  // basis(freeRows[m], m) != 0, unique in row
  MatF gram;                    // 5 x 5 symmetric, nondegenerate
};

WModel buildWModel(const SymplecticForm& beta);

// Gram of the quadric X0 X4 - X1^2 - X2^2 - X3^2, polarized with the same
// scale the W-model carries (twice the coefficient matrix of the form).
MatF standardGram();

struct StandardModel {
  bool operator==(const StandardModel&) const { return true; }
};
using NullModel = std::variant<WModel, StandardModel>;

// <G, G'> for polynomial coordinate vectors under a symmetric Gram matrix.
UniPoly gramPairing(const MatF& gram, const std::vector<UniPoly>& g,
                    const std::vector<UniPoly>& h);

// True iff <G,G> = 0 and <G',G'> = 0 identically; asserts the middle
// identity <G,G'> = 0 (forced by differentiation) as a self-check.
bool isNullCurve(const ProjectiveCurve& g, const MatF& gram);

// A curve in P^4 with image in the null quadric of its model, tangent
// directions null as well.
class NullCurve {
 public:
  NullCurve(ProjectiveCurve curve, NullModel model);

  const ProjectiveCurve& curve() const { return curve_; }
  const NullModel& model() const { return model_; }
  const MatF& gram() const;
  bool isWModel() const { return std::holds_alternative<WModel>(model_); }

 private:
  ProjectiveCurve curve_;
  NullModel model_;
};

// f_2 written in the W-model of beta.  Requires isContact(f, beta) (else
// NotContact) and a nonlinear f (else LinearCurve); the image is verified
// nondegenerate in P^4 and null.
NullCurve kleinForward(const ProjectiveCurve& f, const SymplecticForm& beta);
// Same, recovering beta first.
NullCurve kleinForward(const ProjectiveCurve& f);

// The unique nondegenerate contact curve f with f_2 = g, by intersecting
// the supports of the antisymmetric contraction matrices of G and G' over
// the rational function field.  Errors: NotNull, LinearCurve (image in a
// line), NotDecomposable (G ^ G != 0 for malformed bivector input).
ProjectiveCurve kleinInverse(const NullCurve& g);

// Completion of an affine null curve gamma : S -> C^3 into the standard
// quadric: [B^2, A1 B, A2 B, A3 B, A1^2+A2^2+A3^2] with gamma = A / B.
// Errors: NotNull (sum of squared derivatives nonzero), ConstantInput.
NullCurve completeNull(const std::array<RatFunction, 3>& gamma);

// Transport between W-models and the standard quadric model.  A W-model
// curve is first carried onto the W-model of the standard form by a Darboux
// change of the contact form (exact for the Gram pairings), then through the
// fixed Q(i) change of variables splitting X1^2 + X2^2.  A standard-quadric
// curve comes back in the W-model of the standard form.
NullCurve modelChange(const NullCurve& g);

// The standard form xi0^xi3 + xi1^xi2 whose W-model the model change targets.
SymplecticForm standardContactForm();

}  // namespace plucker::klein
