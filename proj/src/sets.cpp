#include "popdiff/sets.hpp"

#include "popdiff/errors.hpp"

#include "json.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>

namespace popdiff {

using nlohmann::json;

IntegerSet IntegerSet::create(long long n, std::vector<long long> elems) {
    if (n < 1) throw precondition_error("interval ambient must satisfy N >= 1");
    std::sort(elems.begin(), elems.end());
    for (std::size_t i = 0; i < elems.size(); ++i) {
        if (elems[i] < 1 || elems[i] > n)
            throw precondition_error("element " + std::to_string(elems[i]) + " outside [1, " +
                                     std::to_string(n) + "]");
        if (i > 0 && elems[i] == elems[i - 1])
            throw precondition_error("duplicate element " + std::to_string(elems[i]));
    }
    return IntegerSet{n, std::move(elems)};
}

CyclicSet CyclicSet::create(long long m, std::vector<long long> elems) {
    if (m < 1) throw precondition_error("cyclic modulus must satisfy M >= 1");
    for (auto& e : elems) e = ((e % m) + m) % m;
    std::sort(elems.begin(), elems.end());
    for (std::size_t i = 1; i < elems.size(); ++i)
        if (elems[i] == elems[i - 1])
            throw precondition_error("duplicate residue " + std::to_string(elems[i]) + " mod " +
                                     std::to_string(m));
    return CyclicSet{m, std::move(elems)};
}

GridSet GridSet::create(const PrimeModulus& pm, std::vector<GridPoint> elems) {
    long long p = pm.value();
    for (auto& e : elems) {
        e.x = ((e.x % p) + p) % p;
        e.y = ((e.y % p) + p) % p;
    }
    std::sort(elems.begin(), elems.end());
    for (std::size_t i = 1; i < elems.size(); ++i)
        if (elems[i] == elems[i - 1])
            throw precondition_error("duplicate grid point (" + std::to_string(elems[i].x) + ", " +
                                     std::to_string(elems[i].y) + ")");
    return GridSet{p, std::move(elems)};
}

long long set_size(const AnySet& s) {
    return std::visit([](const auto& v) { return v.size(); }, s);
}

AnySet load_set(std::istream& in, const std::string& origin) {
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw parse_error(origin + ": " + e.what());
    }
    try {
        if (!j.is_object() || !j.contains("ambient") || !j.contains("elements"))
            throw parse_error(origin + ": expected object with 'ambient' and 'elements'");
        const json& amb = j.at("ambient");
        const json& el = j.at("elements");
        if (!el.is_array()) throw parse_error(origin + ": 'elements' must be an array");
        if (amb.contains("interval")) {
            long long n = amb.at("interval").get<long long>();
            std::vector<long long> elems;
            for (std::size_t i = 0; i < el.size(); ++i) {
                if (!el[i].is_number_integer())
                    throw parse_error(origin + ": elements[" + std::to_string(i) + "] is not an integer");
                elems.push_back(el[i].get<long long>());
            }
            return IntegerSet::create(n, std::move(elems));
        }
        if (amb.contains("cyclic")) {
            long long m = amb.at("cyclic").get<long long>();
            std::vector<long long> elems;
            for (std::size_t i = 0; i < el.size(); ++i) {
                if (!el[i].is_number_integer())
                    throw parse_error(origin + ": elements[" + std::to_string(i) + "] is not an integer");
                elems.push_back(el[i].get<long long>());
            }
            return CyclicSet::create(m, std::move(elems));
        }
        if (amb.contains("grid")) {
            long long p = amb.at("grid").get<long long>();
            std::vector<GridPoint> elems;
            for (std::size_t i = 0; i < el.size(); ++i) {
                if (!el[i].is_array() || el[i].size() != 2)
                    throw parse_error(origin + ": elements[" + std::to_string(i) + "] is not a pair");
                elems.push_back(GridPoint{el[i][0].get<long long>(), el[i][1].get<long long>()});
            }
            return GridSet::create(PrimeModulus(p), std::move(elems));
        }
        throw parse_error(origin + ": ambient must be one of interval/cyclic/grid");
    } catch (const json::exception& e) {
        throw parse_error(origin + ": " + e.what());
    } catch (const precondition_error& e) {
        throw parse_error(origin + ": " + e.what());
    }
}

AnySet load_set_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open set file: " + path);
    return load_set(in, path);
}

void save_set(const AnySet& s, std::ostream& out) {
    json j;
    if (const auto* a = std::get_if<IntegerSet>(&s)) {
        j["ambient"] = {{"interval", a->ambient}};
        j["elements"] = a->elements;
    } else if (const auto* c = std::get_if<CyclicSet>(&s)) {
        j["ambient"] = {{"cyclic", c->modulus}};
        j["elements"] = c->elements;
    } else {
        const auto& g = std::get<GridSet>(s);
        j["ambient"] = {{"grid", g.p}};
        json el = json::array();
        for (const auto& pt : g.elements) el.push_back({pt.x, pt.y});
        j["elements"] = std::move(el);
    }
    out << j.dump() << "\n";
}

void save_set_file(const AnySet& s, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw error("cannot write set file: " + path);
    save_set(s, out);
}

} // namespace popdiff
