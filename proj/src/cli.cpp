#include "sympswc/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "sympswc/characters.hpp"
#include "sympswc/render.hpp"
#include "sympswc/swc.hpp"
#include "sympswc/symfunc.hpp"
#include "sympswc/tensor.hpp"

namespace sympswc::cli {

namespace {

const std::map<std::string, Command>& command_names() {
    static const std::map<std::string, Command> names{
        {"compute", Command::Compute}, {"universal", Command::Universal}, {"weil", Command::Weil},
        {"regular", Command::Regular}, {"sp4", Command::Sp4},             {"dickson", Command::Dickson},
        {"pmn", Command::Pmn},         {"tensor", Command::Tensor},       {"validate", Command::Validate},
    };
    return names;
}

std::string command_name(Command c) {
    for (const auto& [name, cmd] : command_names())
        if (cmd == c) return name;
    return "?";
}

// Fields a command accepts from an --in file; required ones are checked by validate_job.
const std::set<std::string>& allowed_fields(Command c) {
    static const std::map<Command, std::set<std::string>> table{
        {Command::Compute, {"n", "character", "cap", "format", "method"}},
        {Command::Universal, {"n", "character", "format"}},
        {Command::Weil, {"n", "q", "cap", "format", "prime"}},
        {Command::Regular, {"n", "q", "cap", "format"}},
        {Command::Sp4, {"character", "rep", "q", "cap", "format"}},
        {Command::Dickson, {"n", "k", "cap", "format"}},
        {Command::Pmn, {"m", "n", "domain", "cap", "format"}},
        {Command::Tensor, {"vars", "weights", "a", "b", "domain", "cap", "format"}},
        {Command::Validate, {"n", "character", "format"}},
    };
    return table.at(c);
}

Format parse_format(const std::string& s) {
    if (s == "text") return Format::Text;
    if (s == "latex") return Format::Latex;
    if (s == "json") return Format::Json;
    throw Error(ErrorKind::Parse, "unknown format '" + s + "' (expected text, latex or json)");
}

Domain parse_domain(const std::string& s) {
    if (s == "gf2") return Domain::GF2;
    if (s == "int") return Domain::Integer;
    throw Error(ErrorKind::Parse, "unknown domain '" + s + "' (expected gf2 or int)");
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, sep)) parts.push_back(part);
    if (!s.empty() && s.back() == sep) parts.emplace_back();
    return parts;
}

mpz_class json_integer(const nlohmann::json& v) {
    if (v.is_number_integer()) return mpz_class(v.dump());
    if (v.is_string()) {
        mpz_class z;
        if (z.set_str(v.get<std::string>(), 10) == 0) return z;
    }
    throw Error(ErrorKind::Parse, "expected an integer or decimal string, got " + v.dump());
}

void merge_json_input(JobSpec& job, const nlohmann::json& j, const std::set<std::string>& explicit_flags) {
    if (!j.is_object()) throw Error(ErrorKind::Parse, "--in: expected a JSON object");
    const auto& allowed = allowed_fields(job.command);
    for (const auto& [key, value] : j.items()) {
        if (key == "weights" && job.command != Command::Tensor) continue;  // carried by the output schema
        if (!allowed.count(key))
            throw Error(ErrorKind::Parse, "--in: field '" + key + "' is not used by '" + command_name(job.command) + "'");
        if (explicit_flags.count(key)) continue;
        try {
            if (key == "n") job.n = value.get<std::size_t>();
            else if (key == "q") job.q = value.get<std::uint64_t>();
            else if (key == "k") job.k = value.get<std::size_t>();
            else if (key == "m") job.m = value.get<std::size_t>();
            else if (key == "cap") job.cap = value.get<Degree>();
            else if (key == "format") job.format = parse_format(value.get<std::string>());
            else if (key == "method") job.method = value.get<std::string>();
            else if (key == "rep") job.rep = value.get<std::string>();
            else if (key == "domain") job.domain = parse_domain(value.get<std::string>());
            else if (key == "prime") job.prime = value.get<bool>();
            else if (key == "vars") job.vars = value.get<std::vector<std::string>>();
            else if (key == "weights") job.weights = value.get<std::vector<unsigned>>();
            else if (key == "a") job.a = value.get<std::string>();
            else if (key == "b") job.b = value.get<std::string>();
            else if (key == "character") {
                std::vector<mpz_class> chi;
                for (const auto& v : value) chi.push_back(json_integer(v));
                job.character = std::move(chi);
            }
        } catch (const nlohmann::json::exception& e) {
            throw Error(ErrorKind::Parse, "--in: bad value for '" + key + "': " + e.what());
        }
    }
}

void require(bool present, const std::string& field, Command c) {
    if (!present) throw Error(ErrorKind::Parse, "'" + command_name(c) + "' requires --" + field);
}

CharacterData character_of(const JobSpec& job) {
    const auto& values = *job.character;
    if (values.size() != *job.n + 1)
        throw Error(ErrorKind::MalformedCharacter, "expected " + std::to_string(*job.n + 1) +
                                                       " character values (g_0..g_n) for n = " +
                                                       std::to_string(*job.n) + ", got " +
                                                       std::to_string(values.size()));
    return CharacterData{*job.n, values};
}

void emit(std::ostream& out, Format format, const std::string& label, const GradedPoly& p, std::size_t n) {
    switch (format) {
        case Format::Text: out << label << " = " << to_text(p) << "\n"; break;
        case Format::Latex: out << label << " = " << to_latex(p) << "\n"; break;
        case Format::Json: out << to_json_string(p, n) << "\n"; break;
    }
}

void emit_class(std::ostream& out, Format format, const SWClass& cls) {
    emit(out, format, "w", cls.total(), cls.n());
}

std::string join_mpz(const std::vector<mpz_class>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].get_str();
    return s;
}

}  // namespace

Degree default_cap() {
    if (const char* env = std::getenv("SWC_DEFAULT_CAP")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && end != env) return v;
    }
    return kDefaultCap;
}

std::vector<mpz_class> parse_character(const std::string& s) {
    std::vector<mpz_class> values;
    for (const auto& part : split(s, ',')) {
        std::string t;
        for (char c : part)
            if (!std::isspace(static_cast<unsigned char>(c))) t += c;
        mpz_class z;
        if (t.empty() || z.set_str(t, 10) != 0) throw Error(ErrorKind::Parse, "bad character value '" + part + "'");
        values.push_back(z);
    }
    if (values.empty()) throw Error(ErrorKind::Parse, "empty character vector");
    return values;
}

void validate_job(const JobSpec& job) {
    const Command c = job.command;
    switch (c) {
        case Command::Compute:
        case Command::Universal:
        case Command::Validate:
            require(job.n.has_value(), "n", c);
            require(job.character.has_value(), "char", c);
            if (c == Command::Compute && job.method != "general" && job.method != "gow" && job.method != "symplectic")
                throw Error(ErrorKind::Parse, "unknown method '" + job.method + "'");
            break;
        case Command::Weil:
        case Command::Regular:
            require(job.n.has_value(), "n", c);
            require(job.q.has_value(), "q", c);
            break;
        case Command::Sp4:
            if (job.character) {
                if (!job.rep.empty()) throw Error(ErrorKind::Parse, "'sp4' takes either --char or --rep, not both");
            } else {
                require(!job.rep.empty(), "rep (or --char)", c);
                require(job.q.has_value(), "q", c);
                if (job.rep != "pi1" && job.rep != "pi2")
                    throw Error(ErrorKind::Parse, "unknown Sp(4,q) representation '" + job.rep + "'");
            }
            break;
        case Command::Dickson: require(job.n.has_value(), "n", c); break;
        case Command::Pmn:
            require(job.m.has_value(), "m", c);
            require(job.n.has_value(), "n", c);
            break;
        case Command::Tensor:
            require(!job.vars.empty(), "vars", c);
            if (!job.weights.empty() && job.weights.size() != job.vars.size())
                throw Error(ErrorKind::Parse, "--weights must list one weight per variable");
            break;
    }
}

void execute(const JobSpec& job, std::ostream& out) {
    const Format fmt = job.format;
    switch (job.command) {
        case Command::Compute: {
            const CharacterData chi = character_of(job);
            if (job.method == "gow")
                emit_class(out, fmt, total_swc_gow_orthogonal(chi, job.cap));
            else if (job.method == "symplectic")
                emit_class(out, fmt, total_swc_symmetrized_symplectic(chi, job.cap));
            else
                emit_class(out, fmt, total_swc(chi, job.cap));
            return;
        }
        case Command::Universal: {
            const CharacterData chi = character_of(job);
            const GradedPoly w4 = universal_w4(chi);
            std::optional<GradedPoly> w8;
            if (chi.n >= 2) w8 = universal_w8(chi);
            if (fmt == Format::Json) {
                nlohmann::ordered_json j;
                j["w4"] = to_json(w4, chi.n);
                if (w8) j["w8"] = to_json(*w8, chi.n);
                out << j.dump() << "\n";
                return;
            }
            emit(out, fmt, "w4", w4, chi.n);
            if (w8) emit(out, fmt, "w8", *w8, chi.n);
            return;
        }
        case Command::Weil: {
            const CharacterData chi = job.prime ? weil_prime_character(*job.n, *job.q) : weil_character(*job.n, *job.q);
            emit_class(out, fmt, mod2_chern(chi, job.cap));
            return;
        }
        case Command::Regular:
            emit_class(out, fmt, total_swc(regular_character(*job.n, *job.q), job.cap));
            return;
        case Command::Sp4: {
            CharacterData chi;
            if (job.character) {
                chi = CharacterData{2, *job.character};
                if (chi.values.size() != 3)
                    throw Error(ErrorKind::MalformedCharacter, "sp4 expects three values chi(1), chi(g_1), chi(-1)");
            } else {
                chi = symmetrize(job.rep == "pi1" ? sp4_pi1_character(*job.q) : sp4_pi2_character(*job.q));
            }
            emit_class(out, fmt, sp4_closed_form(chi, job.cap));
            return;
        }
        case Command::Dickson: {
            const std::size_t n = *job.n;
            if (job.k) {
                emit(out, fmt, "D^[" + std::to_string(*job.k) + "]", dickson_factor(n, *job.k).truncated(job.cap), n);
            } else {
                emit(out, fmt, "D", dickson_total(n).truncated(job.cap), n);
            }
            return;
        }
        case Command::Pmn: {
            const PmnPolynomial p = compute_pmn(*job.m, *job.n, job.domain);
            emit(out, fmt, "P_{" + std::to_string(p.m) + "," + std::to_string(p.n) + "}", p.body.truncated(job.cap),
                 p.m + p.n);
            return;
        }
        case Command::Tensor: {
            std::vector<unsigned> weights = job.weights;
            if (weights.empty()) weights.assign(job.vars.size(), 1);
            const RingPtr ring = make_ring(job.vars, weights, job.domain);
            auto slots = [&](const std::string& spec) {
                ClassVector cv;
                if (spec.empty()) return cv;
                for (const auto& part : split(spec, ';')) cv.components.push_back(parse_text(part, ring));
                cv.rank = cv.components.size();
                return cv;
            };
            const ClassVector a = slots(job.a);
            const ClassVector b = slots(job.b);
            const GradedPoly result = tensor_class(a, b, job.domain, job.cap);
            emit(out, fmt, job.domain == Domain::GF2 ? "w" : "c", result, ring->num_vars());
            return;
        }
        case Command::Validate: {
            const CharacterData chi = character_of(job);
            const MultiplicityVector mv = validate_orthogonal(chi);
            if (fmt == Format::Json) {
                nlohmann::ordered_json j;
                j["n"] = chi.n;
                j["valid"] = true;
                auto m = nlohmann::ordered_json::array();
                for (const auto& v : mv.m) m.push_back(v.get_str());
                j["m"] = std::move(m);
                out << j.dump() << "\n";
            } else {
                out << "ok: m = (" << join_mpz(mv.m) << ")\n";
            }
            return;
        }
    }
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Stiefel-Whitney classes of orthogonal representations of Sp(2n,q)", "sympswc"};
    app.require_subcommand(1);

    JobSpec job;
    job.cap = default_cap();
    std::string character, format = "text", domain = "gf2", in_file, vars, weights;
    std::size_t n = 0, k = 0, m = 0;
    std::uint64_t q = 0;
    Degree cap = job.cap;

    std::map<CLI::App*, Command> subs;
    std::map<std::string, CLI::Option*> opts;
    auto sub = [&](const std::string& name, const std::string& desc) {
        CLI::App* s = app.add_subcommand(name, desc);
        subs[s] = command_names().at(name);
        s->add_option("--format", format, "Output format: text, latex or json");
        s->add_option("--in", in_file, "Read job fields from a JSON file ('-' for stdin)");
        return s;
    };
    auto opt = [&](CLI::App* s, const std::string& key, CLI::Option* o) { opts[s->get_name() + ":" + key] = o; };

    for (const char* name : {"compute", "universal", "validate"}) {
        CLI::App* s = sub(name, std::string(name) == "compute"     ? "Total class from character values"
                                : std::string(name) == "universal" ? "w_4 and w_8 from the universal formulas"
                                                                   : "Check that a character can be orthogonal");
        opt(s, "n", s->add_option("--n", n, "Rank: the group is Sp(2n,q)"));
        opt(s, "character", s->add_option("--char", character, "Comma-separated chi(g_0),...,chi(g_n)"));
        if (std::string(name) == "compute") {
            opt(s, "cap", s->add_option("--cap", cap, "Truncation degree"));
            opt(s, "method", s->add_option("--method", job.method, "general, gow or symplectic"));
        }
    }
    for (const char* name : {"weil", "regular"}) {
        CLI::App* s = sub(name, std::string(name) == "weil" ? "Mod-2 Chern class of the Weil representation"
                                                            : "Total class of the regular representation");
        opt(s, "n", s->add_option("--n", n, "Rank"));
        opt(s, "q", s->add_option("--q", q, "Odd prime power"));
        opt(s, "cap", s->add_option("--cap", cap, "Truncation degree"));
        if (std::string(name) == "weil") opt(s, "prime", s->add_flag("--prime", job.prime, "Use W' instead of W"));
    }
    {
        CLI::App* s = sub("sp4", "Closed form for Sp(4,q)");
        opt(s, "character", s->add_option("--char", character, "chi(1),chi(g_1),chi(-1) of an orthogonal character"));
        opt(s, "rep", s->add_option("--rep", job.rep, "pi1 or pi2 (symmetrized)"));
        opt(s, "q", s->add_option("--q", q, "Odd prime power"));
        opt(s, "cap", s->add_option("--cap", cap, "Truncation degree"));
    }
    {
        CLI::App* s = sub("dickson", "Dickson factor D^[k] (or the full product) in elementary symmetric form");
        opt(s, "n", s->add_option("--n", n, "Rank"));
        opt(s, "k", s->add_option("--k", k, "Hamming weight class 1..n"));
        opt(s, "cap", s->add_option("--cap", cap, "Truncation degree"));
    }
    {
        CLI::App* s = sub("pmn", "Universal tensor polynomial P_{m,n}");
        opt(s, "m", s->add_option("--m", m, "Rank of the first factor"));
        opt(s, "n", s->add_option("--n", n, "Rank of the second factor"));
        opt(s, "domain", s->add_option("--domain", domain, "gf2 or int"));
        opt(s, "cap", s->add_option("--cap", cap, "Truncation degree"));
    }
    {
        CLI::App* s = sub("tensor", "Class of an external tensor product");
        opt(s, "vars", s->add_option("--vars", vars, "Comma-separated variable names"));
        opt(s, "weights", s->add_option("--weights", weights, "Comma-separated variable weights (default 1)"));
        opt(s, "a", s->add_option("--a", job.a, "Classes w_1;w_2;... of the first factor"));
        opt(s, "b", s->add_option("--b", job.b, "Classes of the second factor"));
        opt(s, "domain", s->add_option("--domain", domain, "gf2 (Stiefel-Whitney) or int (Chern)"));
        opt(s, "cap", s->add_option("--cap", cap, "Truncation degree"));
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitParse;
    }

    try {
        CLI::App* chosen = app.get_subcommands().front();
        job.command = subs.at(chosen);
        const std::string prefix = chosen->get_name() + ":";
        auto given = [&](const std::string& key) {
            auto it = opts.find(prefix + key);
            return it != opts.end() && it->second->count() > 0;
        };
        std::set<std::string> explicit_flags;
        for (const auto& [key, o] : opts)
            if (key.rfind(prefix, 0) == 0 && o->count() > 0) explicit_flags.insert(key.substr(prefix.size()));
        if (chosen->get_option("--format")->count() > 0) explicit_flags.insert("format");

        if (given("n")) job.n = n;
        if (given("q")) job.q = q;
        if (given("k")) job.k = k;
        if (given("m")) job.m = m;
        if (given("cap")) job.cap = cap;
        if (given("character")) job.character = parse_character(character);
        if (given("vars")) job.vars = split(vars, ',');
        if (given("weights"))
            for (const auto& w : split(weights, ',')) job.weights.push_back(static_cast<unsigned>(std::stoul(w)));
        job.format = parse_format(format);
        job.domain = parse_domain(domain);

        if (!in_file.empty()) {
            nlohmann::json j;
            try {
                if (in_file == "-") {
                    j = nlohmann::json::parse(in);
                } else {
                    std::ifstream f(in_file);
                    if (!f) throw Error(ErrorKind::Parse, "cannot open '" + in_file + "'");
                    j = nlohmann::json::parse(f);
                }
            } catch (const nlohmann::json::exception& e) {
                throw Error(ErrorKind::Parse, std::string("--in: ") + e.what());
            }
            merge_json_input(job, j, explicit_flags);
        }

        validate_job(job);
        execute(job, out);
        return kExitOk;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        switch (e.kind()) {
            case ErrorKind::Parse: return kExitParse;
            case ErrorKind::CapRequired:
            case ErrorKind::CapExceeded: return kExitCap;
            default: return kExitValidation;
        }
    } catch (const std::invalid_argument& e) {
        err << "error: bad number: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}

}  // namespace sympswc::cli
