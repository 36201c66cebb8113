#ifndef GREENIDX_ERROR_HPP_
#define GREENIDX_ERROR_HPP_

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace greenidx {

  //! Every failure raised by the library carries one of these kinds.
  enum class error_kind {
    out_of_range,
    not_associative,
    empty_generators,
    domain_mismatch,
    not_homomorphism,
    internal_inconsistency,
    not_generating,
    not_an_h_class,
    not_comparable,
    not_in_subsemigroup,
    bad_input_presentation,
    dagger_violation,
    bound_exceeded,
    invalid_letter,
    alphabet_mismatch,
    delay_exceeded,
    budget_exceeded,
    hypothesis_fails,
    input_error
  };

  inline std::string_view to_string(error_kind k) noexcept {
    switch (k) {
      case error_kind::out_of_range: return "OutOfRange";
      case error_kind::not_associative: return "NotAssociative";
      case error_kind::empty_generators: return "EmptyGenerators";
      case error_kind::domain_mismatch: return "DomainMismatch";
      case error_kind::not_homomorphism: return "NotHomomorphism";
      case error_kind::internal_inconsistency: return "InternalInconsistency";
      case error_kind::not_generating: return "NotGenerating";
      case error_kind::not_an_h_class: return "NotAnHClass";
      case error_kind::not_comparable: return "NotComparable";
      case error_kind::not_in_subsemigroup: return "NotInSubsemigroup";
      case error_kind::bad_input_presentation: return "BadInputPresentation";
      case error_kind::dagger_violation: return "DaggerViolation";
      case error_kind::bound_exceeded: return "BoundExceeded";
      case error_kind::invalid_letter: return "InvalidLetter";
      case error_kind::alphabet_mismatch: return "AlphabetMismatch";
      case error_kind::delay_exceeded: return "DelayExceeded";
      case error_kind::budget_exceeded: return "BudgetExceeded";
      case error_kind::hypothesis_fails: return "HypothesisFails";
      case error_kind::input_error: return "InputError";
    }
    return "Unknown";
  }

  class error : public std::runtime_error {
   public:
    error(error_kind kind, std::string const& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what),
          _kind(kind) {}

    error_kind kind() const noexcept {
      return _kind;
    }

   private:
    error_kind _kind;
  };

  //! Raised by table validation; holds a triple (x, y, z) with
  //! (xy)z != x(yz).
  class not_associative_error : public error {
   public:
    not_associative_error(std::array<std::size_t, 3> witness,
                          std::string const&         what)
        : error(error_kind::not_associative, what), _witness(witness) {}

    std::array<std::size_t, 3> const& witness() const noexcept {
      return _witness;
    }

   private:
    std::array<std::size_t, 3> _witness;
  };

}  // namespace greenidx

#endif  // GREENIDX_ERROR_HPP_
