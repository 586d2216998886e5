#pragma once

#include "kmark/genfun.hpp"
#include "kmark/marked.hpp"
#include "kmark/partition.hpp"
#include "kmark/self_conjugate.hpp"
#include "kmark/series.hpp"
#include "kmark/specialize.hpp"
#include "kmark/unimodal.hpp"
