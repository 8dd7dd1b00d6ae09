// Command line front end: every subcommand maps 1:1 to a library
// operation; the CLI adds no semantics of its own.
//
// Exit codes: 0 ok, 1 usage, 2 domain error.

#include <algorithm>
#include <cctype>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "hyperfield/errors.hpp"
#include "hyperfield/filters.hpp"
#include "hyperfield/format.hpp"
#include "hyperfield/limits.hpp"
#include "hyperfield/monads.hpp"
#include "hyperfield/parser.hpp"
#include "hyperfield/similarity.hpp"
#include "hyperfield/worlds.hpp"

namespace hf = hyperfield;

namespace {

struct Usage {
    std::string message;
};

const char* kHelp = R"help(usage: hyperfield [--json] <command> [args]

commands:
  eval EXPR                     evaluate and display an expression
  classify EXPR                 infinitesimal | appreciable | infinite
  st EXPR                       standard part of a finite element
  decompose EXPR                infinite + standard + infinitesimal split
  monad EXPR EXPR               same monad?
  gal EXPR EXPR                 same galaxy?
  ww rel T U S V                relation of WW(T,U) and WW(S,V)
  ww member T U S               is S in WW(T,U)?
  cases T0 U                    interval classification for (t0, u)
  cases-table                   the nine canonical interval cases
  limit EXPR                    nonstandard limit of n -> x(n)
  eps-index EXPR L EPS          minimal m with |x(n)-L| <= eps for n >= m
  cauchy-index EXPR EPS         minimal k with |x(n)-x(m)| <= eps for n,m >= k
  selfsim T T0 U                translated reciprocal 1/T + T0 on |T| >= U
  filters enum N                all filters on {0..N-1}, N <= 4
  filters check FAMILY          filter / ultrafilter axioms
  filters quotient FAMILY       is the quotient a field?
  repl                          interactive session

expressions use rationals, w, eps, + - * / ^, e.g. "(2*w^2+w)/(w^2-1)".
filter families are comma-separated subsets, e.g. "{0},{0,1},{0,1,2}".
)help";

hf::Hyper arg_expr(const std::vector<std::string>& args, std::size_t i) {
    if (i >= args.size()) throw Usage{"missing expression argument"};
    return hf::eval_expression(args[i]);
}

hf::Rational arg_rational(const std::vector<std::string>& args, std::size_t i) {
    if (i >= args.size()) throw Usage{"missing rational argument"};
    try {
        return hf::Rational(args[i]);
    } catch (const std::exception&) {
        throw Usage{"not a rational: " + args[i]};
    }
}

void need_args(const std::vector<std::string>& args, std::size_t n) {
    if (args.size() != n) throw Usage{"wrong number of arguments"};
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

// "{0},{0,1},{0,1,2}" -> filter family
hf::FiniteFilter parse_family(const std::string& text, int universe) {
    hf::FiniteFilter f{universe, {}};
    std::size_t i = 0;
    while (i < text.size()) {
        if (text[i] != '{') throw Usage{"expected '{' in family"};
        ++i;
        hf::Mask m = 0;
        while (i < text.size() && text[i] != '}') {
            if (!std::isdigit(static_cast<unsigned char>(text[i])))
                throw Usage{"expected element index in family"};
            std::size_t end = i;
            while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
            int el = std::stoi(text.substr(i, end - i));
            if (el < 0 || el >= universe) throw Usage{"element out of universe"};
            m |= hf::Mask(1) << el;
            i = end;
            if (i < text.size() && text[i] == ',') ++i;
        }
        if (i >= text.size()) throw Usage{"unterminated subset"};
        ++i;  // '}'
        f.family.insert(m);
        if (i < text.size()) {
            if (text[i] != ',') throw Usage{"expected ',' between subsets"};
            ++i;
        }
    }
    if (f.family.empty()) throw Usage{"empty family"};
    return f;
}

int family_universe(const std::string& text) {
    // universe = 1 + largest index mentioned
    int max_el = -1;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (std::isdigit(static_cast<unsigned char>(text[i]))) {
            std::size_t end = i;
            while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
            max_el = std::max(max_el, std::stoi(text.substr(i, end - i)));
            i = end - 1;
        }
    }
    if (max_el < 0) throw Usage{"family mentions no elements"};
    return max_el + 1;
}

std::string family_str(const hf::FiniteFilter& f) {
    std::ostringstream out;
    bool first_set = true;
    for (hf::Mask m : f.family) {
        if (!first_set) out << ",";
        first_set = false;
        out << "{";
        bool first = true;
        for (int i = 0; i < f.universe_size; ++i) {
            if (m & (hf::Mask(1) << i)) {
                if (!first) out << ",";
                first = false;
                out << i;
            }
        }
        out << "}";
    }
    return out.str();
}

std::string relation_str(hf::WorldRelation r) {
    switch (r) {
        case hf::WorldRelation::Same: return "same";
        case hf::WorldRelation::Disjoint: return "disjoint";
        case hf::WorldRelation::FirstInsideSecond: return "first-inside-second";
        default: return "second-inside-first";
    }
}

int run_command(const std::string& cmd, const std::vector<std::string>& args, bool json);

int run_repl(bool json) {
    std::string line;
    while (std::cout << "> " << std::flush, std::getline(std::cin, line)) {
        if (line.empty()) continue;
        if (line == "quit" || line == "exit") break;
        std::istringstream in(line);
        std::string cmd;
        in >> cmd;
        // arguments are comma separated; expressions contain no commas
        std::vector<std::string> args;
        if (cmd == "ww" || cmd == "filters") {  // subcommand is a bare word
            std::string sub;
            in >> sub;
            if (!sub.empty()) args.push_back(sub);
        }
        std::string rest;
        std::getline(in, rest);
        if (cmd == "filters") {  // families contain commas; take rest whole
            std::size_t a = rest.find_first_not_of(" \t");
            if (a != std::string::npos)
                args.push_back(rest.substr(a, rest.find_last_not_of(" \t") - a + 1));
            rest.clear();
        }
        std::size_t start = 0;
        while (start <= rest.size() && !rest.empty()) {
            std::size_t comma = rest.find(',', start);
            std::string piece = rest.substr(start, comma == std::string::npos
                                                       ? std::string::npos
                                                       : comma - start);
            std::size_t a = piece.find_first_not_of(" \t");
            if (a != std::string::npos)
                args.push_back(piece.substr(a, piece.find_last_not_of(" \t") - a + 1));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        try {
            run_command(cmd, args, json);
        } catch (const Usage& u) {
            std::cout << "usage error: " << u.message << "\n";
        } catch (const hf::Error& e) {
            std::cout << "error: " << e.what() << "\n";
        }
    }
    return 0;
}

int run_command(const std::string& cmd, const std::vector<std::string>& args, bool json) {
    auto& out = std::cout;

    if (cmd == "eval") {
        need_args(args, 1);
        hf::Hyper x = arg_expr(args, 0);
        out << (json ? hf::format_json(x) : hf::format_annotated(x)) << "\n";
        return 0;
    }
    if (cmd == "classify") {
        need_args(args, 1);
        std::string c = hf::class_name(arg_expr(args, 0).classify());
        out << (json ? "{\"class\":\"" + c + "\"}" : c) << "\n";
        return 0;
    }
    if (cmd == "st") {
        need_args(args, 1);
        std::string st = hf::to_string(arg_expr(args, 0).standard_part());
        out << (json ? "{\"st\":\"" + st + "\"}" : st) << "\n";
        return 0;
    }
    if (cmd == "decompose") {
        need_args(args, 1);
        hf::Decomposition d = hf::decompose(arg_expr(args, 0));
        if (json) {
            out << "{\"infinite\":" << hf::format_json(d.infinite_part)
                << ",\"st\":\"" << hf::to_string(d.standard_part)
                << "\",\"infinitesimal\":" << hf::format_json(d.infinitesimal_part)
                << "}\n";
        } else {
            out << "infinite:      " << hf::format_human(d.infinite_part) << "\n"
                << "standard:      " << hf::to_string(d.standard_part) << "\n"
                << "infinitesimal: " << hf::format_human(d.infinitesimal_part) << "\n";
        }
        return 0;
    }
    if (cmd == "monad" || cmd == "gal") {
        need_args(args, 2);
        hf::Hyper x = arg_expr(args, 0), y = arg_expr(args, 1);
        bool same = cmd == "monad" ? hf::same_monad(x, y) : hf::same_galaxy(x, y);
        out << (json ? "{\"same\":" + bool_str(same) + "}" : bool_str(same)) << "\n";
        return 0;
    }
    if (cmd == "ww") {
        if (args.empty()) throw Usage{"ww needs a subcommand: rel | member"};
        if (args[0] == "rel") {
            need_args(args, 5);
            hf::World w1(arg_expr(args, 1), arg_expr(args, 2));
            hf::World w2(arg_expr(args, 3), arg_expr(args, 4));
            std::string r = relation_str(hf::ww_relation(w1, w2));
            out << (json ? "{\"relation\":\"" + r + "\"}" : r) << "\n";
            return 0;
        }
        if (args[0] == "member") {
            need_args(args, 4);
            hf::World w(arg_expr(args, 1), arg_expr(args, 2));
            bool member = hf::ww_contains(w, arg_expr(args, 3));
            out << (json ? "{\"member\":" + bool_str(member) + "}" : bool_str(member)) << "\n";
            return 0;
        }
        throw Usage{"unknown ww subcommand: " + args[0]};
    }
    if (cmd == "cases") {
        need_args(args, 2);
        hf::IntervalCase c = hf::interval_case(arg_expr(args, 0), arg_expr(args, 1));
        out << (json ? hf::format_case_json(c) : hf::format_case_human(c)) << "\n";
        return 0;
    }
    if (cmd == "cases-table") {
        need_args(args, 0);
        bool first = true;
        if (json) out << "[";
        for (auto& [t0, u] : hf::canonical_case_inputs()) {
            hf::IntervalCase c = hf::interval_case(t0, u);
            if (json) {
                if (!first) out << ",";
                out << hf::format_case_json(c);
            } else {
                out << hf::format_case_human(c) << "\n";
            }
            first = false;
        }
        if (json) out << "]\n";
        return 0;
    }
    if (cmd == "limit") {
        need_args(args, 1);
        hf::LimitResult r = hf::ns_limit(arg_expr(args, 0));
        std::string text = r.converges() ? "converges " + hf::to_string(r.limit)
                           : r.kind == hf::LimitResult::Kind::DivergesPlus
                               ? std::string("diverges +inf")
                               : std::string("diverges -inf");
        if (json) {
            if (r.converges())
                out << "{\"result\":\"converges\",\"limit\":\"" << hf::to_string(r.limit)
                    << "\"}\n";
            else
                out << "{\"result\":\"diverges\",\"sign\":\""
                    << (r.kind == hf::LimitResult::Kind::DivergesPlus ? "+" : "-") << "\"}\n";
        } else {
            out << text << "\n";
        }
        return 0;
    }
    if (cmd == "eps-index") {
        need_args(args, 3);
        hf::Int m = hf::epsilon_index(arg_expr(args, 0), arg_rational(args, 1),
                                      arg_rational(args, 2));
        out << (json ? "{\"index\":" + m.str() + "}" : m.str()) << "\n";
        return 0;
    }
    if (cmd == "cauchy-index") {
        need_args(args, 2);
        hf::Int k = hf::cauchy_index(arg_expr(args, 0), arg_rational(args, 1));
        out << (json ? "{\"index\":" + k.str() + "}" : k.str()) << "\n";
        return 0;
    }
    if (cmd == "selfsim") {
        need_args(args, 3);
        hf::Hyper image = hf::translated_reciprocal(arg_expr(args, 0), arg_expr(args, 1),
                                                    arg_expr(args, 2));
        out << (json ? hf::format_json(image) : hf::format_annotated(image)) << "\n";
        return 0;
    }
    if (cmd == "filters") {
        if (args.empty()) throw Usage{"filters needs a subcommand: enum | check | quotient"};
        if (args[0] == "enum") {
            need_args(args, 2);
            int n = std::stoi(args[1]);
            auto all = hf::enumerate_filters(n);
            if (json) {
                out << "{\"filters\":[";
                bool first = true;
                for (auto& f : all) {
                    if (!first) out << ",";
                    first = false;
                    out << "{\"family\":\"" << family_str(f) << "\",\"ultrafilter\":"
                        << bool_str(hf::is_ultrafilter(f)) << "}";
                }
                out << "],\"count\":" << all.size() << "}\n";
            } else {
                for (auto& f : all)
                    out << family_str(f)
                        << (hf::is_ultrafilter(f) ? "   [ultrafilter]" : "") << "\n";
                out << all.size() << " filters\n";
            }
            return 0;
        }
        if (args[0] == "check" || args[0] == "quotient") {
            need_args(args, 2);
            hf::FiniteFilter f = parse_family(args[1], family_universe(args[1]));
            if (args[0] == "check") {
                bool fl = hf::is_filter(f), ul = fl && hf::is_ultrafilter(f);
                if (json)
                    out << "{\"filter\":" << bool_str(fl) << ",\"ultrafilter\":"
                        << bool_str(ul) << "}\n";
                else
                    out << "filter: " << bool_str(fl) << ", ultrafilter: " << bool_str(ul)
                        << "\n";
                return 0;
            }
            bool field = hf::quotient_is_field(f);
            out << (json ? "{\"field\":" + bool_str(field) + "}" : "field: " + bool_str(field))
                << "\n";
            return 0;
        }
        throw Usage{"unknown filters subcommand: " + args[0]};
    }
    if (cmd == "repl") {
        need_args(args, 0);
        return run_repl(json);
    }
    throw Usage{"unknown command: " + cmd};
}

}  // namespace

int main(int argc, char** argv) {
    bool json = false;
    std::vector<std::string> args;
    std::string cmd;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        if (a == "--json") {
            json = true;
        } else if (a == "--help" || a == "-h") {
            std::cout << kHelp;
            return 0;
        } else if (cmd.empty()) {
            cmd = a;
        } else {
            args.push_back(a);
        }
    }
    if (cmd.empty()) {
        std::cerr << kHelp;
        return 1;
    }
    try {
        return run_command(cmd, args, json);
    } catch (const Usage& u) {
        std::cerr << "usage error: " << u.message << "\n";
        return 1;
    } catch (const hf::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
