#pragma once

#include <stdexcept>
#include <string>

namespace galois {

// Error taxonomy shared by all modules. The CLI maps these onto exit codes:
// usage/invariant/parse -> 2, resource -> 3.
class Error : public std::runtime_error {
public:
    enum class Kind { Usage, Invariant, Resource, Parse };

    Error(Kind kind, std::string msg) : std::runtime_error(std::move(msg)), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

struct UsageError : Error {
    explicit UsageError(std::string msg) : Error(Kind::Usage, std::move(msg)) {}
};

struct InvariantError : Error {
    explicit InvariantError(std::string msg) : Error(Kind::Invariant, std::move(msg)) {}
};

// Thrown when a configured cap would be exceeded; the message names the cap.
struct ResourceError : Error {
    explicit ResourceError(std::string msg) : Error(Kind::Resource, std::move(msg)) {}
};

struct ParseError : Error {
    explicit ParseError(std::string msg) : Error(Kind::Parse, std::move(msg)) {}
};

// Resource limits for the enumeration and factorization kernels. All caps are
// overridable from the CLI (--caps) and from library callers.
struct Caps {
    int max_group_order = 128;      // subgroup scans, quotients
    int max_ep_order = 64;          // embedding-property checks
    int max_system_size = 512;      // total elements of a complete system
    int max_aut_system_size = 256;  // automorphism enumeration of S(G)
    long max_product_size = 1000000;  // materialized triple products
    int max_factor_degree = 12;       // rational factorization fallback
    long max_root_candidates = 1 << 21;  // modular root-kernel assembly
    unsigned long seed = 0;              // factorization shift sequence
};

}  // namespace galois
