#include "hyperfield/format.hpp"

#include <sstream>

namespace hyperfield {

namespace {

std::string exponent_str(const Rational& e) {
    // fractions and negatives are parenthesized so the result re-parses
    if (denominator(e) == 1 && e > 0) return "^" + to_string(e);
    return "^(" + to_string(e) + ")";
}

void append_term(std::ostringstream& out, const Term& t, bool first) {
    Rational c = t.coef;
    if (first) {
        if (c < 0) {
            out << "-";
            c = -c;
        }
    } else {
        out << (c < 0 ? " - " : " + ");
        if (c < 0) c = -c;
    }
    if (t.exp == 0) {
        out << to_string(c);
        return;
    }
    if (c != 1) out << to_string(c) << "*";
    out << "w";
    if (t.exp != 1) out << exponent_str(t.exp);
}

std::string poly_str(const GPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto& t : p.terms()) {
        append_term(out, t, first);
        first = false;
    }
    return out.str();
}

// A side can stand unparenthesized next to '/' only when it is a single
// parser factor.
bool needs_parens(const GPoly& p) {
    if (p.terms().size() != 1) return true;
    const Term& t = p.terms().front();
    if (t.exp == 0) return false;                    // bare rational
    return t.coef != 1 && t.coef != -1;              // "2*w" would rebind
}

std::string wrap(const GPoly& p) {
    std::string s = poly_str(p);
    return needs_parens(p) ? "(" + s + ")" : s;
}

void append_json_poly(std::ostringstream& out, const GPoly& p) {
    out << "[";
    bool first = true;
    for (auto& t : p.terms()) {
        if (!first) out << ",";
        first = false;
        out << "[\"" << to_string(t.exp) << "\",\"" << to_string(t.coef) << "\"]";
    }
    out << "]";
}

}  // namespace

std::string class_name(MagnitudeClass m) {
    switch (m) {
        case MagnitudeClass::Infinitesimal: return "infinitesimal";
        case MagnitudeClass::Appreciable: return "appreciable";
        default: return "infinite";
    }
}

std::string format_human(const Hyper& x) {
    // fold a constant denominator into the numerator
    const GPoly& d = x.den();
    if (d.terms().size() == 1 && d.leading().exp == 0) {
        return poly_str(x.num().scaled(Rational(1) / d.leading().coef));
    }
    return wrap(x.num()) + "/" + wrap(x.den());
}

std::string format_annotated(const Hyper& x) {
    std::ostringstream out;
    out << format_human(x) << "   [" << class_name(x.classify());
    if (!is_infinitely_large(x)) out << ", st=" << to_string(x.standard_part());
    out << "]";
    return out.str();
}

std::string format_json(const Hyper& x) {
    std::ostringstream out;
    out << "{\"num\":";
    append_json_poly(out, x.num());
    out << ",\"den\":";
    append_json_poly(out, x.den());
    out << ",\"class\":\"" << class_name(x.classify()) << "\"";
    if (!is_infinitely_large(x)) out << ",\"st\":\"" << to_string(x.standard_part()) << "\"";
    out << "}";
    return out.str();
}

std::string format_case_human(const IntervalCase& c) {
    std::ostringstream out;
    out << "case " << c.case_id << " (outcome " << c.outcome_id << "): "
        << "subset_of_gal0=" << (c.subset_of_gal0 ? "yes" : "no")
        << " contains_gal0_minus_center=" << (c.contains_gal0_minus_center ? "yes" : "no")
        << " disjoint_from_gal0=" << (c.disjoint_from_gal0 ? "yes" : "no")
        << " intersects_gal0=" << (c.intersects_gal0 ? "yes" : "no")
        << " length=" << class_name(c.length_class);
    return out.str();
}

std::string format_case_json(const IntervalCase& c) {
    std::ostringstream out;
    out << "{\"case\":" << c.case_id << ",\"outcome\":" << c.outcome_id
        << ",\"subset_of_gal0\":" << (c.subset_of_gal0 ? "true" : "false")
        << ",\"contains_gal0_minus_center\":" << (c.contains_gal0_minus_center ? "true" : "false")
        << ",\"disjoint_from_gal0\":" << (c.disjoint_from_gal0 ? "true" : "false")
        << ",\"intersects_gal0\":" << (c.intersects_gal0 ? "true" : "false")
        << ",\"length_class\":\"" << class_name(c.length_class) << "\"}";
    return out.str();
}

}  // namespace hyperfield
