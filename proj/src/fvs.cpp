#include "clifford/fvs.hpp"

#include <stdexcept>

namespace clifford {

std::string_view to_string(StepMode mode) noexcept {
  switch (mode) {
    case StepMode::full:
      return "full";
    case StepMode::bott:
      return "bott";
    case StepMode::span_reduced:
      return "reduced";
    case StepMode::span_full:
      return "span-full";
  }
  return "unknown";
}

std::optional<StepMode> parse_step_mode(std::string_view text) noexcept {
  if (text == "full") return StepMode::full;
  if (text == "bott") return StepMode::bott;
  if (text == "reduced") return StepMode::span_reduced;
  if (text == "span-full") return StepMode::span_full;
  return std::nullopt;
}

std::size_t step_count(const Signature& sig, int span_count, StepMode mode) {
  if (span_count < 0 || span_count > sig.n()) throw std::invalid_argument("span larger than the algebra");
  const int n = sig.n();
  switch (mode) {
    case StepMode::full:
      return std::size_t{1} << n;
    case StepMode::bott:
      return std::size_t{1} << ((n + 1) / 2);
    case StepMode::span_reduced:
      return std::size_t{1} << ((span_count + 1) / 2);
    case StepMode::span_full:
      return std::size_t{1} << span_count;
  }
  throw std::invalid_argument("unknown step mode");
}

template FvsResult<Rational> fvs_run(const Multivector<Rational>&, StepMode, bool);
template FvsResult<double> fvs_run(const Multivector<double>&, StepMode, bool);

}  // namespace clifford
