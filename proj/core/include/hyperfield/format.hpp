#ifndef HYPERFIELD_FORMAT_HPP
#define HYPERFIELD_FORMAT_HPP

#include <string>

#include "hyperfield/hyper.hpp"
#include "hyperfield/similarity.hpp"

namespace hyperfield {

// Canonical display form, terms in decreasing exponent order, e.g.
// "(2*w^2 + w) / (w^2 - 1)". Parses back to an equal element.
std::string format_human(const Hyper& x);

// format_human plus a classification annotation, e.g.
// "(w + 1)/w   [appreciable, st=1]".
std::string format_annotated(const Hyper& x);

// Stable machine form: {"num":[["2","1"]],"den":[["0","1"]],
// "class":"infinite"}; "st" present unless infinitely large.
std::string format_json(const Hyper& x);

std::string class_name(MagnitudeClass m);

std::string format_case_human(const IntervalCase& c);
std::string format_case_json(const IntervalCase& c);

}  // namespace hyperfield

#endif
