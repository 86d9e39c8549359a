#ifndef DYADIC_JSON_HPP
#define DYADIC_JSON_HPP

// JSON forms of the library's results. Rationals are always "p/q" strings
// (integers print without a denominator); no floating point is emitted.

#include "dyadic/adjacency.hpp"
#include "dyadic/expansion.hpp"
#include "dyadic/far.hpp"
#include "dyadic/grid.hpp"
#include "dyadic/mei_cover.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace dyadic {

using json = nlohmann::ordered_json;

inline json to_json(const Rational& r) { return r.to_string(); }

inline Rational rational_from_json(const json& j) { return Rational::parse(j.get<std::string>()); }

inline json to_json(const Digits& digits)
{
    json out = json::array();
    for (Digit d : digits) {
        out.push_back(d);
    }
    return out;
}

inline json to_json(const BaseNExpansion& e)
{
    return {{"base", e.base().value()},
            {"value", to_json(e.value())},
            {"preperiod", to_json(e.preperiod())},
            {"period", to_json(e.period())}};
}

inline json to_json(const TieReport& tie)
{
    if (tie.infinite()) {
        return "infinite";
    }
    return *tie.length;
}

inline json to_json(const FarnessCertificate& c)
{
    json witness = nullptr;
    if (c.tie.witness) {
        witness = {{"start", c.tie.witness->start}, {"end", c.tie.witness->end}, {"digit", c.tie.witness->digit}};
    }
    return {{"delta", to_json(c.delta)},
            {"base", c.base.value()},
            {"is_far", c.is_far},
            {"T", to_json(c.tie)},
            {"d", c.d_value ? to_json(*c.d_value) : json(nullptr)},
            {"C", c.c_value ? to_json(*c.c_value) : json(nullptr)},
            {"bound_ok", c.bound_ok},
            {"witness", witness}};
}

inline json to_json(const GridRep& g)
{
    return {{"base", g.base().value()}, {"shift", to_json(g.shift())}, {"location", g.location().to_string()}};
}

inline GridRep grid_from_json(const json& j)
{
    const Base base(j.at("base").get<std::uint32_t>());
    return {base, rational_from_json(j.at("shift")), DigitSequence::parse(j.at("location").get<std::string>(), base)};
}

inline json to_json(const Interval& i) { return {{"left", to_json(i.left())}, {"generation", i.generation()}}; }

inline Interval interval_from_json(const json& j, const Base& base)
{
    return {rational_from_json(j.at("left")), j.at("generation").get<std::int64_t>(), base};
}

inline json to_json(const Query& q) { return {{"left", to_json(q.left())}, {"right", to_json(q.right())}}; }

inline Query query_from_json(const json& j) { return {rational_from_json(j.at("left")), rational_from_json(j.at("right"))}; }

inline json to_json(const CoverResult& c)
{
    return {{"interval", to_json(c.interval)}, {"source", to_string(c.source)}, {"ratio", to_json(c.ratio)}};
}

inline CoverResult cover_from_json(const json& j, const Base& base)
{
    const auto source = j.at("source").get<std::string>();
    if (source != "FIRST_GRID" && source != "SECOND_GRID") {
        throw std::invalid_argument("unknown cover source: " + source);
    }
    return {interval_from_json(j.at("interval"), base),
            source == "FIRST_GRID" ? CoverSource::FirstGrid : CoverSource::SecondGrid,
            rational_from_json(j.at("ratio"))};
}

inline json to_json(const AdjacencyReport& r)
{
    json points = json::array();
    for (const auto& p : r.profile.limit_points) {
        points.push_back(to_json(p));
    }
    return {{"adjacent", r.adjacent},
            {"shift_gap", to_json(r.shift_gap)},
            {"shift_gap_far", r.shift_gap_far},
            {"c1", to_json(r.profile.c1)},
            {"c2", to_json(r.profile.c2)},
            {"limit_points", points},
            {"failing_condition", to_string(r.failing_condition)}};
}

inline json to_json(const EstimateSummary& s)
{
    return {{"max_ratio", s.max_ratio ? to_json(*s.max_ratio) : json("unbounded")},
            {"argmax_query", s.argmax_query ? to_json(*s.argmax_query) : json(nullptr)},
            {"trials", s.trials},
            {"uncovered", s.uncovered}};
}

inline json to_json(const Witness& w)
{
    return {{"m0", w.m0}, {"k0", w.k0.str()}, {"query", to_json(w.query)}};
}

} // namespace dyadic

#endif // DYADIC_JSON_HPP
