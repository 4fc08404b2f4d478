#pragma once

#include "loopbraid/agg.hpp"
#include "loopbraid/braid_word.hpp"
#include "loopbraid/free_group.hpp"
#include "loopbraid/group_module.hpp"
#include "loopbraid/lifted_artin.hpp"
#include "loopbraid/membership.hpp"
#include "loopbraid/relations.hpp"
#include "loopbraid/selftest.hpp"
