#!/usr/bin/env python3
# Copyright 2026 The ExtEval Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Writes data/figure1: the Mount Everest worked example with three summaries.

Offsets are code-point indices, which is what Python string indexing gives.
"""

import json
import os
import sys

DOC_ID = "cnn_everest"

# One entry per sentence: (text, [EDU texts] or None). Sentences on the same
# output line are joined by a space; lines by "\n".
LINES = [
    [("(CNN) Most climbers who try don't succeed in summiting the "
      "29,035-foot-high Mount Everest, the world's tallest peak.", None)],
    [("But they do leave their trash. Thousands of pounds of it.", None)],
    [("That's why an experienced climbing group from the Indian army plans to "
      "trek up the 8,850-meter mountain to pick up at least 4,000 kilograms "
      "(more than 8,000 pounds) of waste from the high-altitude camps, "
      "according to India Today.",
      ["That's why an experienced climbing group from the Indian army plans "
       "to trek up the 8,850-meter mountain",
       "to pick up at least 4,000 kilograms",
       "(more than 8,000 pounds) of waste from the high-altitude camps,",
       "according to India Today."])],
    [("The mountain is part of the Himalaya mountain range on the border "
      "between Nepal and the Tibet region.", None)],
    [("The 34-member team plans to depart for Kathmandu on Saturday and start "
      "the ascent in mid-May.", None)],
    [("The upcoming trip marks the 50th anniversary of the first Indian team "
      "to scale Mount Everest.", None)],
    [("\"Sadly, Mount Everest is now ... called the world's highest "
      "junkyard,\" Maj. Ranveer Singh Jamval, the team leader, told India "
      "Today.", None),
     ("\"We will target the mountaineering waste from Camp 1 (19,695 feet) to "
      "the summit,\" said Jamval, who has scaled Mount Everest twice.", None),
     ("\"There are old cylinders, tents, tins, packets, equipment and other "
      "mountaineering waste.", None)],
    [("Apart from our own haversacks weighing 10 kg each, we intend to bring "
      "in another 10 kg each on the trip.\"", None)],
    [("More than 200 climbers have died attempting to climb the peak, part of "
      "a UNESCO World Heritage Site.",
      ["More than 200 climbers have died",
       "attempting to climb the peak, part of a UNESCO World Heritage Site."])],
    [("The Indian expedition isn't the first attempt to clean up the trash "
      "left by generations of hikers.",
      ["The Indian expedition isn't the first attempt",
       "to clean up the trash",
       "left by generations of hikers."])],
    [("Among the cleanup efforts is the Eco Everest Expedition, an annual "
      "trip launched in 2008 that is all about climbing \"in an "
      "eco-sensitive manner,\" bringing old refuse, in addition to that "
      "generated during the trip, down for disposal, according to the Asian "
      "Trekking website.", None),
     ("Last year, Nepalese tourism authorities started to require hikers to "
      "carry out an extra 18 pounds of garbage, in addition to their own "
      "trash and human waste, according to the New York Times.", None)],
]

# Invented per-sentence sentiment scores (1 = most positive).
DOC_SENTI = [0.35, 0.3, 0.55, 0.5, 0.6, 0.7, 0.2, 0.5, 0.35, 0.5, 0.15, 0.45,
             0.65, 0.4]

REFERENCE = ("Climbing group from Indian army plans to pick up at least 4,000 "
             "kilograms of waste from the high-altitude camps. The 34-member "
             "team plans to depart for Kathmandu on Saturday.")


def build_document():
    text = ""
    sentences = []
    for li, line in enumerate(LINES):
        if li > 0:
            text += "\n"
        for si, (sent, edus) in enumerate(line):
            if si > 0:
                text += " "
            start = len(text)
            text += sent
            rec = {"index": len(sentences), "start": start, "end": len(text)}
            if edus:
                rec["edus"] = []
                cursor = start
                for e in edus:
                    at = text.index(e, cursor)
                    rec["edus"].append({"start": at, "end": at + len(e)})
                    cursor = at + len(e)
            sentences.append(rec)
    return text + "\n", sentences


def find(text, needle, occurrence=0, after=0):
    at = after - 1
    for _ in range(occurrence + 1):
        at = text.index(needle, at + 1)
    return {"start": at, "end": at + len(needle), "text": needle}


def sentence_start(sentences, k):
    return sentences[k]["start"]


def summary_text(text, sentences, units):
    parts = []
    for u in units:
        s = sentences[u["sentence"]]
        if "edu" in u:
            e = s["edus"][u["edu"]]
            parts.append(text[e["start"]:e["end"]])
        else:
            parts.append(text[s["start"]:s["end"]])
    return " ".join(parts)


def write_json(path, obj):
    os.makedirs(os.path.dirname(path), exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        f.write(json.dumps(obj, ensure_ascii=False, indent=1) + "\n")


def main(root):
    text, sentences = build_document()
    s = lambda k: sentence_start(sentences, k)

    red = ("Most climbers who try don't succeed in summiting the "
           "29,035-foot-high Mount Everest, the world's tallest peak.")
    s1 = sentences[1]
    doc_clusters = [
        # The trash sentence and the "That" that points back at it.
        [{"start": s1["start"], "end": s1["end"],
          "text": text[s1["start"]:s1["end"]]},
         find(text, "That", after=s(2))],
        # The climbers.
        [find(text, "Most climbers who try"), find(text, "they", after=s(1)),
         find(text, "their", after=s(1))],
        # Their trash.
        [find(text, "their trash", after=s(1)), find(text, "it", after=s(1) + 50)],
        # The mountain.
        [find(text, "the 29,035-foot-high Mount Everest, the world's tallest peak"),
         find(text, "the 8,850-meter mountain", after=s(2)),
         find(text, "The mountain", after=s(3)),
         find(text, "Mount Everest", after=s(5))],
        # The first sentence's statement, which nothing in the document
        # refers back to.
        [find(text, red)],
    ]
    # Sanity: "it" must be the one in "Thousands of pounds of it."
    assert doc_clusters[2][1]["start"] < s1["end"]

    systems = {
        "neusumm": [{"sentence": 0}, {"sentence": 2}, {"sentence": 3}],
        "oracle_disco": [{"sentence": 2, "edu": 0}, {"sentence": 2, "edu": 1},
                         {"sentence": 10, "edu": 0},
                         {"sentence": 11, "edu": 1},
                         {"sentence": 11, "edu": 2}],
        "bert_lstm_pn_rl": [{"sentence": 1}, {"sentence": 3}, {"sentence": 4},
                            {"sentence": 5}],
    }
    # Summary-side coreference, as a coreference model run on each summary
    # would produce it.
    summ_clusters = {}
    t = summary_text(text, sentences, systems["neusumm"])
    summ_clusters["neusumm"] = [[find(t, red), find(t, "That")]]
    t = summary_text(text, sentences, systems["oracle_disco"])
    summ_clusters["oracle_disco"] = [[find(t, "That")]]
    t = summary_text(text, sentences, systems["bert_lstm_pn_rl"])
    summ_clusters["bert_lstm_pn_rl"] = [
        [find(t, "they"), find(t, "their")],
        [find(t, "The mountain"), find(t, "Mount Everest")],
    ]

    corpus = os.path.join(root, "corpus")
    os.makedirs(corpus, exist_ok=True)
    with open(os.path.join(corpus, DOC_ID + ".txt"), "w", encoding="utf-8") as f:
        f.write(text)
    with open(os.path.join(corpus, DOC_ID + ".sents.jsonl"), "w",
              encoding="utf-8") as f:
        for rec in sentences:
            f.write(json.dumps(rec) + "\n")
    ann = os.path.join(root, "annotations")
    write_json(os.path.join(ann, DOC_ID + ".coref.json"),
               {"scope": "document", "clusters": doc_clusters})
    assert len(DOC_SENTI) == len(sentences)
    write_json(os.path.join(ann, DOC_ID + ".senti.json"),
               {"scores": DOC_SENTI, "provider": "fixture"})
    for sys_id, units in systems.items():
        for u in units:
            u["text"] = summary_text(text, sentences, [u])
        write_json(os.path.join(root, "systems", sys_id, DOC_ID + ".summ.json"),
                   {"units": units})
        write_json(os.path.join(ann, sys_id, DOC_ID + ".summcoref.json"),
                   {"scope": "summary", "clusters": summ_clusters[sys_id]})
    # EDU summaries carry their own sentiment scores.
    write_json(os.path.join(ann, "oracle_disco", DOC_ID + ".summsenti.json"),
               {"scores": [0.55, 0.5, 0.15, 0.45, 0.4], "provider": "fixture"})
    refs = os.path.join(root, "references")
    os.makedirs(refs, exist_ok=True)
    with open(os.path.join(refs, DOC_ID + ".txt"), "w", encoding="utf-8") as f:
        f.write(REFERENCE + "\n")
    labels = os.path.join(root, "labels")
    os.makedirs(labels, exist_ok=True)
    with open(os.path.join(labels, "human.csv"), "w", encoding="utf-8") as f:
        f.write("doc_id,system_id,incorrect_coref,incomplete_coref,"
                "incorrect_discourse,incomplete_discourse,misleading,overall\n")
        f.write(DOC_ID + ",bert_lstm_pn_rl,0,1,0,1,0,2\n")
        f.write(DOC_ID + ",neusumm,1,0,0,0,0,1\n")
        f.write(DOC_ID + ",oracle_disco,0,1,1,0,0,2\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else
         os.path.join(os.path.dirname(__file__), "..", "data", "figure1"))
