#pragma once

#include <string>

#include "qmf/qmod.hpp"

namespace qmf {

// schema 1: {"schema":1,"config":{...},"kind":...,...}
std::string report_json(const ObstructionReport& rep, const std::string& config_echo, int digits);

// header row then one row per (grid point, method):
// re,im,value_re,value_im,err_est,method,form,gamma
std::string report_csv(const ObstructionReport& rep, int digits);

std::string json_escape(const std::string& s);

} // namespace qmf
