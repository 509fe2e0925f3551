#pragma once

#include <string>

#include "stiefelmw/crosscheck.hpp"
#include "stiefelmw/group_eval.hpp"
#include "stiefelmw/motive.hpp"
#include "stiefelmw/stiefel_basis.hpp"

namespace stiefelmw::cli {

enum class Format { Plain, Json, Csv, Latex };

struct RenderOptions {
    Format format = Format::Plain;
    Conventions conv;
    VanishingFlags flags;
    bool all = false;     // keep zero rows / print matching pairs
    bool braced = false;  // degree display in the braced convention
};

/// One display axis of a groups query: a single value or an inclusive range.
struct AxisSpec {
    int from = 0;
    int to = 0;

    bool single() const { return from == to; }
};

std::string cmd_basis(StiefelIndex idx, const RenderOptions& opt);
std::string cmd_motive(StiefelIndex idx, const RenderOptions& opt);
std::string cmd_groups(StiefelIndex idx, AxisSpec p, AxisSpec q, const RenderOptions& opt);
std::string cmd_euler(StiefelIndex idx, const RenderOptions& opt);
std::string cmd_crosscheck(const CrosscheckReport& report, const RenderOptions& opt);
std::string cmd_report(StiefelIndex idx, const std::string& convention_name,
                       const RenderOptions& opt);

}  // namespace stiefelmw::cli
