#pragma once

#include <string>

#include "json.hpp"

#include "hopseat/model.hpp"

namespace hopseat {

inline constexpr const char* kScheduleVersion = "hop-schedule/1";

// Participants are encoded "i.a" (couple i, bit a); tables in the spec are full sizes 2m_i.
nlohmann::json schedule_to_json(const Schedule& s);
// Throws ParseError on anything that is not a well-formed document.
Schedule schedule_from_json(const nlohmann::json& j);

std::string write_document(const Schedule& s);
Schedule read_document(const std::string& text);

std::string participant_token(const Participant& p);
Participant parse_participant(const std::string& tok);

}  // namespace hopseat
