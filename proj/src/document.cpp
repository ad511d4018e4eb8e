#include "hopseat/document.hpp"

namespace hopseat {

using nlohmann::json;

std::string participant_token(const Participant& p) { return std::to_string(p.couple) + "." + std::to_string(p.bit); }

Participant parse_participant(const std::string& tok) {
    const auto dot = tok.find('.');
    auto bad = [&] { return Error(ErrorCode::ParseError, "bad participant '" + tok + "'"); };
    if (dot == std::string::npos || dot == 0 || dot + 2 != tok.size()) throw bad();
    for (size_t i = 0; i < dot; ++i)
        if (tok[i] < '0' || tok[i] > '9') throw bad();
    const char b = tok[dot + 1];
    if (b != '0' && b != '1') throw bad();
    if (dot > 9) throw bad();
    return Participant{std::stoi(tok.substr(0, dot)), b - '0'};
}

json schedule_to_json(const Schedule& s) {
    json tables = json::array();
    for (int h : s.spec.half_sizes) tables.push_back(2 * h);
    json nights = json::array();
    for (const auto& night : s.nights) {
        json pairs = json::array(), cycles = json::array();
        for (const auto& [a, b] : night.pairs) pairs.push_back({participant_token(a), participant_token(b)});
        for (const auto& t : night.tables) {
            json c = json::array();
            for (const auto& p : t) c.push_back(participant_token(p));
            cycles.push_back(std::move(c));
        }
        nights.push_back({{"pairs", std::move(pairs)}, {"cycles", std::move(cycles)}});
    }
    return json{{"version", kScheduleVersion},
                {"spec", {{"s", s.spec.s}, {"tables", std::move(tables)}}},
                {"gamma", s.spec.gamma},
                {"nights", std::move(nights)}};
}

Schedule schedule_from_json(const json& j) {
    try {
        if (!j.is_object() || j.at("version").get<std::string>() != kScheduleVersion)
            throw Error(ErrorCode::ParseError, "missing or unknown version tag");
        const json& spec = j.at("spec");
        std::vector<int> halves;
        for (const auto& t : spec.at("tables")) {
            int full = t.get<int>();
            if (full < 4 || full % 2 != 0) throw Error(ErrorCode::ParseError, "table size " + std::to_string(full) + " is not an even integer >= 4");
            halves.push_back(full / 2);
        }
        Schedule s;
        try {
            s.spec = make_problem_spec(spec.at("s").get<int>(), halves);
        } catch (const Error& e) {
            throw Error(ErrorCode::ParseError, std::string("spec: ") + e.what());
        }
        if (j.at("gamma").get<long>() != s.spec.gamma) throw Error(ErrorCode::ParseError, "gamma does not match the spec");
        for (const auto& jn : j.at("nights")) {
            Night night;
            for (const auto& pr : jn.at("pairs")) {
                if (!pr.is_array() || pr.size() != 2) throw Error(ErrorCode::ParseError, "a pair needs two participants");
                night.pairs.push_back({parse_participant(pr[0].get<std::string>()), parse_participant(pr[1].get<std::string>())});
            }
            for (const auto& c : jn.at("cycles")) {
                std::vector<Participant> t;
                for (const auto& p : c) t.push_back(parse_participant(p.get<std::string>()));
                night.tables.push_back(std::move(t));
            }
            s.nights.push_back(std::move(night));
        }
        return s;
    } catch (const json::exception& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
}

std::string write_document(const Schedule& s) { return schedule_to_json(s).dump(1) + "\n"; }

Schedule read_document(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
    return schedule_from_json(j);
}

}  // namespace hopseat
