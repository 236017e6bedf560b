#pragma once

#include "grpcover/group.hpp"

namespace grpcover {

bool is_abelian(const GroupPtr& g);
bool is_nilpotent(const GroupPtr& g);
bool is_solvable(const GroupPtr& g);
bool is_supersolvable(const GroupPtr& g);
bool is_metabelian(const GroupPtr& g);

struct ClassificationFlags {
    bool abelian = false;
    bool nilpotent = false;
    bool supersolvable = false;
    bool metabelian = false;
    bool solvable = false;
};

ClassificationFlags classify_group(const GroupPtr& g);

}  // namespace grpcover
