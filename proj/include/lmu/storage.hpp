#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "lmu/reduction.hpp"
#include "lmu/term.hpp"

namespace lmu {

enum class StorageKind { T1, T2, Krivine, Custom };

std::string_view to_string(StorageKind kind);

struct StorageOperator {
    StorageKind name = StorageKind::Custom;
    Term term;
};

// T1 = λn((n)δ)G   with G = λxλy(x)λz(y)(s)z and δ = λf(f)0
StorageOperator build_t1();
// T2 = λnλf(((n)f)F)0   with F = λxλy(x)(s)y
StorageOperator build_t2();

// Pair-based predecessor: iterates (a, b) ↦ (s a, a) from (0, 0) and keeps
// the second component, so (p)0 = 0 and (p)(n+1) = n up to β.
Term build_predecessor();

// Krivine's operator T = λn((n)δ)λdλg((T_i)n)λx(g)(s)(p)x. It is a storage
// operator but does not return the fictive value of a classical integer.
StorageOperator build_krivine_t(const StorageOperator& inner);

class StorageShapeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct StorageResult {
    std::size_t value = 0;
    Term raw;            // w in the head normal form (f)w
    Term head_normal;    // the head normal form itself
    std::size_t head_steps = 0;
};

// ((op)t)f with f a λ-variable free in the result.
Term storage_application(const StorageOperator& op, const Term& t);

// Head-reduces ((op)t)f to (f)w, then β-normalizes w to a Church numeral.
// Throws FuelExhausted or StorageShapeError.
StorageResult storage_value(const StorageOperator& op, const Term& t, std::size_t fuel = kDefaultFuel);

// (s)^n 0 with every copy freshened.
Term successor_chain(std::size_t n);

}  // namespace lmu
