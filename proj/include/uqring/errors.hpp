#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace uqring {

/// Base class for every error raised by the library. `kind()` is a stable
/// machine-readable tag (used by the CLI's one-line error output).
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

class AxiomViolation : public Error {
 public:
  AxiomViolation(std::string axiom, std::array<std::size_t, 3> witness, const std::string& message)
      : Error("AxiomViolation", message), axiom_(std::move(axiom)), witness_(witness) {}
  const std::string& axiom() const noexcept { return axiom_; }
  const std::array<std::size_t, 3>& witness() const noexcept { return witness_; }

 private:
  std::string axiom_;
  std::array<std::size_t, 3> witness_;
};

class ZeroRing : public Error {
 public:
  ZeroRing() : Error("ZeroRing", "the zero ring is not accepted") {}
};

class RingMismatch : public Error {
 public:
  RingMismatch() : Error("RingMismatch", "operands belong to different rings") {}
};

class SizeCapExceeded : public Error {
 public:
  SizeCapExceeded(std::size_t requested, std::size_t cap)
      : Error("SizeCapExceeded", "size " + std::to_string(requested) + " exceeds cap " + std::to_string(cap)),
        requested_(requested), cap_(cap) {}
  std::size_t requested() const noexcept { return requested_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t requested_;
  std::size_t cap_;
};

class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& message) : Error("InvalidArgument", message) {}
};

class NotIdempotent : public Error {
 public:
  explicit NotIdempotent(std::size_t e) : Error("NotIdempotent", "element " + std::to_string(e) + " is not idempotent") {}
};

class ZeroIdempotent : public Error {
 public:
  ZeroIdempotent() : Error("ZeroIdempotent", "corner at the zero idempotent is the zero ring") {}
};

class NotAnIdeal : public Error {
 public:
  explicit NotAnIdeal(const std::string& why) : Error("NotAnIdeal", why) {}
};

class BimoduleViolation : public Error {
 public:
  explicit BimoduleViolation(const std::string& why) : Error("BimoduleViolation", why) {}
};

class GroupViolation : public Error {
 public:
  explicit GroupViolation(const std::string& why) : Error("GroupViolation", why) {}
};

class NotAnEmbedding : public Error {
 public:
  explicit NotAnEmbedding(const std::string& why) : Error("NotAnEmbedding", why) {}
};

class VerificationFailed : public Error {
 public:
  VerificationFailed(std::size_t a, std::size_t b, const std::string& why)
      : Error("VerificationFailed", why + " at pair (" + std::to_string(a) + ", " + std::to_string(b) + ")"),
        a_(a), b_(b) {}
  std::size_t first() const noexcept { return a_; }
  std::size_t second() const noexcept { return b_; }

 private:
  std::size_t a_;
  std::size_t b_;
};

class NotAGroupRing : public Error {
 public:
  NotAGroupRing() : Error("NotAGroupRing", "ring was not built by group_ring") {}
};

class PreconditionFailed : public Error {
 public:
  explicit PreconditionFailed(const std::string& why) : Error("PreconditionFailed", why) {}
};

class UnknownClaim : public Error {
 public:
  explicit UnknownClaim(const std::string& id) : Error("UnknownClaim", "no claim registered as " + id) {}
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& why)
      : Error("ParseError", why + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class ImportError : public Error {
 public:
  explicit ImportError(const std::string& why) : Error("ImportError", why) {}
};

}  // namespace uqring
