#include "fplab/linear_system.hpp"

#include <cctype>
#include <sstream>

#include "fplab/errors.hpp"

namespace fplab {

bool LinearForm::is_zero() const {
  for (const auto c : coeffs) {
    if (c != 0) return false;
  }
  return true;
}

std::string LinearForm::to_string() const {
  std::string out;
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (j) out += ',';
    out += std::to_string(coeffs[j]);
  }
  return out;
}

namespace {

// L_a proportional to L_b: a = lambda * b for some nonzero lambda.
bool proportional(const PrimeModulus& mod, const LinearForm& a,
                  const LinearForm& b) {
  if (a.is_zero() || b.is_zero()) return false;
  std::int32_t lambda = 0;
  for (std::size_t j = 0; j < a.coeffs.size(); ++j) {
    const std::int32_t av = a.coeffs[j];
    const std::int32_t bv = b.coeffs[j];
    if (bv == 0) {
      if (av != 0) return false;
      continue;
    }
    const std::int32_t ratio = mod.mul(av, mod.inv(bv));
    if (lambda == 0) {
      lambda = ratio;
    } else if (ratio != lambda) {
      return false;
    }
  }
  return lambda != 0;
}

}  // namespace

LinearSystem::LinearSystem(std::int32_t p, std::vector<LinearForm> forms)
    : p_(p), forms_(std::move(forms)) {
  if (forms_.empty()) throw ContractError("system needs at least one form");
  d_ = forms_.front().d();
  if (d_ < 1) throw ContractError("forms need at least one variable");
  PrimeModulus mod(p_);
  for (std::size_t i = 0; i < forms_.size(); ++i) {
    auto& f = forms_[i];
    if (f.d() != d_) throw ContractError("forms have mixed variable counts");
    for (auto& c : f.coeffs) c = mod.reduce(c);
    if (f.is_zero()) {
      has_zero_form_ = true;
      notes_.push_back("form " + std::to_string(i + 1) + " is zero");
    }
  }
  for (std::size_t i = 0; i < forms_.size(); ++i) {
    for (std::size_t j = i + 1; j < forms_.size(); ++j) {
      if (proportional(mod, forms_[i], forms_[j])) {
        has_proportional_pair_ = true;
        notes_.push_back("forms " + std::to_string(i + 1) + " and " +
                         std::to_string(j + 1) + " are proportional");
      }
    }
  }
}

std::string LinearSystem::to_string() const {
  std::string out;
  for (const auto& f : forms_) {
    out += f.to_string();
    out += '\n';
  }
  return out;
}

LinearSystem parse_system(const std::string& text, std::int32_t p) {
  std::vector<LinearForm> forms;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    bool blank = true;
    for (const char c : line) {
      if (!std::isspace(static_cast<unsigned char>(c))) {
        blank = false;
        break;
      }
    }
    if (blank) continue;

    LinearForm form;
    std::istringstream fields(line);
    std::string field;
    while (std::getline(fields, field, ',')) {
      std::size_t pos = 0;
      long long v = 0;
      try {
        v = std::stoll(field, &pos);
      } catch (const std::exception&) {
        throw ContractError("bad coefficient '" + field + "'");
      }
      while (pos < field.size() &&
             std::isspace(static_cast<unsigned char>(field[pos]))) {
        ++pos;
      }
      if (pos != field.size()) {
        throw ContractError("bad coefficient '" + field + "'");
      }
      form.coeffs.push_back(static_cast<std::int32_t>(v % p));
    }
    if (form.coeffs.empty()) throw ContractError("empty form line");
    forms.push_back(std::move(form));
  }
  return LinearSystem(p, std::move(forms));
}

LinearSystem arithmetic_progression_system(std::int32_t p, int length) {
  if (length < 1) throw ContractError("progression length must be positive");
  std::vector<LinearForm> forms;
  for (int i = 0; i < length; ++i) {
    forms.push_back(LinearForm{{1, i % p}});
  }
  return LinearSystem(p, std::move(forms));
}

}  // namespace fplab
