#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "sympswc/poly.hpp"

namespace sympswc::cli {

enum class Command { Compute, Universal, Weil, Regular, Sp4, Dickson, Pmn, Tensor, Validate };
enum class Format { Text, Latex, Json };

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitValidation = 3;
inline constexpr int kExitCap = 4;

inline constexpr Degree kDefaultCap = 64;

struct JobSpec {
    Command command = Command::Compute;
    std::optional<std::size_t> n;
    std::optional<std::uint64_t> q;
    std::optional<std::vector<mpz_class>> character;
    Degree cap = kDefaultCap;
    Format format = Format::Text;

    std::optional<std::size_t> k;  // dickson
    std::optional<std::size_t> m;  // pmn
    std::string rep;                // sp4: pi1 | pi2
    std::string method = "general"; // compute: general | gow | symplectic
    Domain domain = Domain::GF2;    // pmn, tensor
    bool prime = false;             // weil: use W'
    std::vector<std::string> vars;  // tensor
    std::vector<unsigned> weights;  // tensor
    std::string a, b;               // tensor: ';'-separated slot classes
};

// Cap from SWC_DEFAULT_CAP when set and valid, otherwise 64.
Degree default_cap();

// "6,-2" -> {6, -2}. Throws Error(Parse).
std::vector<mpz_class> parse_character(const std::string& s);

// Throws Error(Parse) if a field required by the command is missing.
void validate_job(const JobSpec& job);

// Executes a validated job, writing the rendered result.
void execute(const JobSpec& job, std::ostream& out);

// Full front end: argv (without program name) -> exit status. Diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace sympswc::cli
