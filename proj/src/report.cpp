#include "qmf/report.hpp"

#include <sstream>

namespace qmf {

std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') { out += '\\'; out += c; }
        else if (c == '\n') out += "\\n";
        else out += c;
    }
    return out;
}

std::string report_json(const ObstructionReport& rep, const std::string& config_echo, int digits) {
    std::ostringstream os;
    os << "{\"schema\":1,\"config\":" << config_echo << ",\"form\":\"" << json_escape(rep.form)
       << "\",\"gamma\":\"" << rep.gamma.str() << "\",\"kappa\":\"" << rep.kappa.str()
       << "\",\"max_pairwise\":\"" << rep.max_pairwise.str(6) << "\",\"continuity_jump\":\""
       << rep.continuity_jump.str(6) << "\",\"failures\":" << rep.failures << ",\"points\":[";
    bool firstp = true;
    for (const auto& pt : rep.points) {
        if (!firstp) os << ",";
        firstp = false;
        os << "{\"z\":[\"" << pt.z.re.str(digits) << "\",\"" << pt.z.im.str(digits)
           << "\"],\"ok\":" << (pt.ok ? "true" : "false");
        if (!pt.note.empty()) os << ",\"note\":\"" << json_escape(pt.note) << "\"";
        os << ",\"max_discrepancy\":\"" << pt.max_discrepancy.str(6) << "\",\"methods\":{";
        bool first = true;
        for (const auto& [m, v] : pt.values) {
            if (!first) os << ",";
            first = false;
            Real e = pt.errs.count(m) ? pt.errs.at(m) : Real(0L);
            os << "\"" << m << "\":{\"value\":[\"" << v.re.str(digits) << "\",\""
               << v.im.str(digits) << "\"],\"err_est\":\"" << e.str(4) << "\"}";
        }
        os << "}}";
    }
    os << "]}";
    return os.str();
}

std::string report_csv(const ObstructionReport& rep, int digits) {
    std::ostringstream os;
    os << "re,im,value_re,value_im,err_est,method,form,gamma\n";
    for (const auto& pt : rep.points) {
        for (const auto& [m, v] : pt.values) {
            Real e = pt.errs.count(m) ? pt.errs.at(m) : Real(0L);
            os << pt.z.re.str(digits) << "," << pt.z.im.str(digits) << "," << v.re.str(digits)
               << "," << v.im.str(digits) << "," << e.str(4) << "," << m << "," << rep.form
               << ",\"" << rep.gamma.str() << "\"\n";
        }
    }
    return os.str();
}

} // namespace qmf
