#include "hopfrep/report.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

namespace hopfrep {

using ordered_json = nlohmann::ordered_json;

bool Report::passed() const {
    for (const auto& item : items) {
        if (!item.pass) return false;
    }
    return true;
}

const ReportItem* Report::find(const std::string& id) const {
    for (const auto& item : items) {
        if (item.id == id) return &item;
    }
    return nullptr;
}

void Report::absorb(const Report& other, const std::string& prefix) {
    for (ReportItem item : other.items) {
        item.id = prefix + "." + item.id;
        items.push_back(std::move(item));
    }
}

void Report::add_pass(const std::string& id, const std::string& diagram, const std::string& note) {
    items.push_back(ReportItem{id, diagram, true, "", "", "", note});
}

void Report::add_fail(const std::string& id, const std::string& diagram, const std::string& witness,
                      const std::string& lhs, const std::string& rhs, const std::string& note) {
    items.push_back(ReportItem{id, diagram, false, witness, lhs, rhs, note});
}

std::string Report::to_text() const {
    std::ostringstream os;
    os << "check: " << check << "\n";
    if (!instance.empty()) os << "instance: " << instance << "\n";
    if (degree >= 0) os << "degree: " << degree << "\n";
    for (const auto& item : items) {
        os << (item.pass ? "PASS" : "FAIL") << " " << item.id << " diagram=" << item.diagram;
        if (!item.note.empty()) os << " note=" << item.note;
        if (!item.pass) {
            os << " witness=" << item.witness << " lhs=" << item.lhs << " rhs=" << item.rhs;
        }
        os << "\n";
    }
    os << "verdict: " << (passed() ? "pass" : "fail") << "\n";
    return os.str();
}

std::string Report::to_json_lines() const {
    std::ostringstream os;
    for (const auto& item : items) {
        ordered_json j;
        j["verdict"] = item.pass ? "pass" : "fail";
        j["diagram"] = item.diagram;
        j["id"] = item.id;
        j["witness"] = item.witness;
        j["lhs"] = item.lhs;
        j["rhs"] = item.rhs;
        if (!item.note.empty()) j["note"] = item.note;
        os << j.dump() << "\n";
    }
    ordered_json summary;
    summary["verdict"] = passed() ? "pass" : "fail";
    summary["diagram"] = "summary";
    summary["id"] = check;
    if (!instance.empty()) summary["instance"] = instance;
    if (degree >= 0) summary["degree"] = degree;
    os << summary.dump() << "\n";
    return os.str();
}

}  // namespace hopfrep
