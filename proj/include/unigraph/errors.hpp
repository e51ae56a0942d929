#pragma once

#include <stdexcept>
#include <string>

namespace unigraph {

/// Invalid construction parameters (bad prime, degree, ring spec string, ...).
class parameter_error : public std::invalid_argument {
public:
    explicit parameter_error(const std::string& what) : std::invalid_argument(what) {}
};

/// Elements or characters from mismatched owners were combined.
class type_error : public std::invalid_argument {
public:
    explicit type_error(const std::string& what) : std::invalid_argument(what) {}
};

/// Inversion or discrete log requested for a non-unit.
class not_a_unit_error : public std::domain_error {
public:
    explicit not_a_unit_error(const std::string& what) : std::domain_error(what) {}
};

/// An enumeration or matrix dimension exceeded its configured cap.
class resource_error : public std::length_error {
public:
    explicit resource_error(const std::string& what) : std::length_error(what) {}
};

/// An internal structural assertion failed (never expected on valid inputs).
class structure_error : public std::logic_error {
public:
    explicit structure_error(const std::string& what) : std::logic_error(what) {}
};

/// Operation requires an extension shape the argument does not have.
class unsupported_extension_error : public std::domain_error {
public:
    explicit unsupported_extension_error(const std::string& what) : std::domain_error(what) {}
};

/// A bilinear form required to be non-degenerate was degenerate.
class degeneracy_error : public std::domain_error {
public:
    explicit degeneracy_error(const std::string& what) : std::domain_error(what) {}
};

/// A supplied sign vector failed the eigenvector / zero-mean / {+-1} checks.
class invalid_eigenvector_error : public std::domain_error {
public:
    explicit invalid_eigenvector_error(const std::string& what) : std::domain_error(what) {}
};

} // namespace unigraph
