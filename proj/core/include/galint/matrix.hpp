#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "galint/ratfunc.hpp"

namespace galint {

// Dense matrix of rational functions, row-major.
struct RfMatrix {
    long rows = 0, cols = 0;
    std::vector<RatFunc> data;

    RfMatrix() = default;
    RfMatrix(long r, long c) : rows(r), cols(c), data(static_cast<std::size_t>(r * c)) {}

    RatFunc& at(long i, long j) { return data[static_cast<std::size_t>(i * cols + j)]; }
    const RatFunc& at(long i, long j) const {
        return data[static_cast<std::size_t>(i * cols + j)];
    }

    static RfMatrix identity(long n);
    static RfMatrix zero(long r, long c) { return RfMatrix(r, c); }

    friend bool operator==(const RfMatrix& a, const RfMatrix& b) {
        return a.rows == b.rows && a.cols == b.cols && a.data == b.data;
    }
    friend bool operator!=(const RfMatrix& a, const RfMatrix& b) { return !(a == b); }
};

RfMatrix operator*(const RfMatrix& a, const RfMatrix& b);
RfMatrix operator+(const RfMatrix& a, const RfMatrix& b);
RfMatrix operator-(const RfMatrix& a, const RfMatrix& b);
RfMatrix transpose(const RfMatrix& m);

RatFunc det(const RfMatrix& m);
std::optional<RfMatrix> inverse(const RfMatrix& m);  // nullopt when singular

// Rank over the rational-function field.
long rank(const RfMatrix& m);

// Entrywise substitution.
RfMatrix substitute(const RfMatrix& m, const std::map<std::string, RatFunc>& bindings);

// Canonical symplectic form [[0, I_n], [-I_n, 0]] of size 2n.
RfMatrix symplectic_form(long n);

}  // namespace galint
