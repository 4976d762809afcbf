#pragma once

#include <cstdint>
#include <string>

namespace levelcomplex {

/// Coefficient field for homology: the rationals or GF(p).
class FieldSpec {
 public:
  enum class Kind { Rationals, Prime };

  static FieldSpec rationals() { return FieldSpec(Kind::Rationals, 0); }
  /// Throws InputError unless p is a prime below 2^31.
  static FieldSpec prime(std::uint32_t p);
  /// "Q" or a prime such as "2", "32003".
  static FieldSpec parse(const std::string& text);

  Kind kind() const { return kind_; }
  std::uint32_t characteristic() const { return p_; }
  bool is_rationals() const { return kind_ == Kind::Rationals; }

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  FieldSpec(Kind kind, std::uint32_t p) : kind_(kind), p_(p) {}
  Kind kind_;
  std::uint32_t p_;
};

std::string to_string(const FieldSpec& field);

}  // namespace levelcomplex
