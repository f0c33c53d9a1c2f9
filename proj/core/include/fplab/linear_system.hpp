#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fplab/field.hpp"

namespace fplab {

// L(x_1..x_d) = c_1 x_1 + ... + c_d x_d with residue coefficients.
struct LinearForm {
  std::vector<std::int32_t> coeffs;

  int d() const { return static_cast<int>(coeffs.size()); }
  bool is_zero() const;
  std::string to_string() const;  // "1,2,0" style

  bool operator==(const LinearForm& o) const { return coeffs == o.coeffs; }
};

// A finite family of forms in the same d variables over a common prime.
// Degeneracies (a zero form, or two proportional forms) are detected on
// construction; degenerate systems are analyzed but flagged, since the
// counting statements assume nondegeneracy.
class LinearSystem {
 public:
  LinearSystem(std::int32_t p, std::vector<LinearForm> forms);

  std::int32_t p() const { return p_; }
  int d() const { return d_; }
  int m() const { return static_cast<int>(forms_.size()); }
  const std::vector<LinearForm>& forms() const { return forms_; }
  const LinearForm& form(int i) const {
    return forms_[static_cast<std::size_t>(i)];
  }

  bool has_zero_form() const { return has_zero_form_; }
  bool has_proportional_pair() const { return has_proportional_pair_; }
  bool degenerate() const { return has_zero_form_ || has_proportional_pair_; }
  const std::vector<std::string>& degeneracy_notes() const { return notes_; }

  std::string to_string() const;  // one form per line

 private:
  std::int32_t p_;
  int d_;
  std::vector<LinearForm> forms_;
  bool has_zero_form_ = false;
  bool has_proportional_pair_ = false;
  std::vector<std::string> notes_;
};

// Text format: one form per line, d comma-separated integers (reduced mod p);
// blank lines and '#' comment lines are skipped.
LinearSystem parse_system(const std::string& text, std::int32_t p);

// Arithmetic progression of the given length: forms x, x+y, ..., x+(m-1)y.
LinearSystem arithmetic_progression_system(std::int32_t p, int length);

}  // namespace fplab
