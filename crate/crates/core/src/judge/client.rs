//! Chat-endpoint client and the corpus-level judging loop.
//!
//! Wire protocol: `POST {base_url}/v1/chat/completions` with a JSON body of
//! `{model, messages, temperature, max_tokens}`, bearer-token auth, and the
//! completion read from `choices[0].message.content`.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Duration;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::cache::JudgmentCache;
use super::parse::parse_judgment;
use super::prompt::{build_prompt, LabeledExample, PromptTemplates};
use super::{ChatRequest, JudgeError, JudgeVariant, Judgment, API_KEY_ENV};
use crate::corpus::Corpus;

/// Where and what to query.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JudgeEndpoint {
    /// Base URL without the `/v1/chat/completions` suffix.
    pub base_url: String,
    pub model: String,
    /// Bearer token; see [`JudgeEndpoint::from_env`].
    #[serde(skip_serializing, default)]
    pub api_key: String,
}

impl JudgeEndpoint {
    /// Construct with the key taken from `READBENCH_API_KEY`.
    pub fn from_env(base_url: impl Into<String>, model: impl Into<String>) -> Result<Self, JudgeError> {
        let api_key = std::env::var(API_KEY_ENV).map_err(|_| JudgeError::MissingApiKey)?;
        Ok(Self {
            base_url: base_url.into(),
            model: model.into(),
            api_key,
        })
    }

    /// Construct with an explicit key (tests, non-env configuration).
    pub fn with_key(
        base_url: impl Into<String>,
        model: impl Into<String>,
        api_key: impl Into<String>,
    ) -> Self {
        Self {
            base_url: base_url.into(),
            model: model.into(),
            api_key: api_key.into(),
        }
    }

    fn completions_url(&self) -> String {
        format!("{}/v1/chat/completions", self.base_url.trim_end_matches('/'))
    }
}

/// Exponential backoff schedule for transient failures (429, 5xx, and
/// transport errors).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RetryPolicy {
    pub max_retries: u32,
    pub initial_backoff_ms: u64,
    pub multiplier: f64,
}

impl Default for RetryPolicy {
    fn default() -> Self {
        Self {
            max_retries: 3,
            initial_backoff_ms: 250,
            multiplier: 2.0,
        }
    }
}

impl RetryPolicy {
    fn backoff(&self, attempt: u32) -> Duration {
        let ms = self.initial_backoff_ms as f64 * self.multiplier.powi(attempt as i32);
        Duration::from_millis(ms as u64)
    }
}

fn is_retryable_status(status: u16) -> bool {
    status == 429 || (500..600).contains(&status)
}

/// Blocking chat client with retry.
pub struct ChatClient {
    agent: ureq::Agent,
    endpoint: JudgeEndpoint,
    retry: RetryPolicy,
}

impl ChatClient {
    pub fn new(endpoint: JudgeEndpoint, retry: RetryPolicy) -> Self {
        let agent = ureq::Agent::config_builder()
            .timeout_global(Some(Duration::from_secs(120)))
            .build()
            .new_agent();
        Self {
            agent,
            endpoint,
            retry,
        }
    }

    /// Send one request; returns the completion text and the number of
    /// retries that were needed.
    pub fn complete(&self, request: &ChatRequest) -> Result<(String, u32), JudgeError> {
        let url = self.endpoint.completions_url();
        let auth = format!("Bearer {}", self.endpoint.api_key);
        let mut attempt = 0u32;
        loop {
            let outcome = self
                .agent
                .post(&url)
                .header("Authorization", &auth)
                .send_json(request);
            match outcome {
                Ok(mut response) => {
                    let value: Value = response.body_mut().read_json().map_err(|e| {
                        JudgeError::BadResponse {
                            detail: e.to_string(),
                        }
                    })?;
                    let content = value
                        .pointer("/choices/0/message/content")
                        .and_then(Value::as_str)
                        .ok_or_else(|| JudgeError::BadResponse {
                            detail: "missing choices[0].message.content".to_string(),
                        })?;
                    return Ok((content.to_string(), attempt));
                }
                Err(ureq::Error::StatusCode(status)) if is_retryable_status(status) => {
                    if attempt >= self.retry.max_retries {
                        return Err(JudgeError::Upstream {
                            status,
                            attempts: attempt + 1,
                        });
                    }
                    log::warn!("endpoint returned {status}, retry {}", attempt + 1);
                    std::thread::sleep(self.retry.backoff(attempt));
                    attempt += 1;
                }
                Err(ureq::Error::StatusCode(status)) => {
                    return Err(JudgeError::Upstream {
                        status,
                        attempts: attempt + 1,
                    });
                }
                Err(e) => {
                    if attempt >= self.retry.max_retries {
                        return Err(JudgeError::Transport {
                            detail: e.to_string(),
                            attempts: attempt + 1,
                        });
                    }
                    log::warn!("transport error ({e}), retry {}", attempt + 1);
                    std::thread::sleep(self.retry.backoff(attempt));
                    attempt += 1;
                }
            }
        }
    }
}

/// Outcome for one document.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JudgeRecord {
    pub doc_id: String,
    pub judgment: Option<Judgment>,
    pub error: Option<String>,
    pub retries: u32,
    pub from_cache: bool,
}

/// Judges whole corpora: prompt construction, cache lookups, bounded
/// concurrency, deterministic merge by input order.
pub struct JudgeRunner {
    client: ChatClient,
    variant: JudgeVariant,
    shots: Option<Vec<LabeledExample>>,
    templates: PromptTemplates,
    concurrency: usize,
    cache: Option<JudgmentCache>,
    model: String,
}

impl JudgeRunner {
    pub fn new(endpoint: JudgeEndpoint, variant: JudgeVariant, retry: RetryPolicy) -> Self {
        let model = endpoint.model.clone();
        Self {
            client: ChatClient::new(endpoint, retry),
            variant,
            shots: None,
            templates: PromptTemplates::builtin(),
            concurrency: 4,
            cache: None,
            model,
        }
    }

    pub fn with_shots(mut self, shots: Vec<LabeledExample>) -> Self {
        self.shots = Some(shots);
        self
    }

    pub fn with_templates(mut self, templates: PromptTemplates) -> Self {
        self.templates = templates;
        self
    }

    pub fn with_concurrency(mut self, limit: usize) -> Self {
        self.concurrency = limit.max(1);
        self
    }

    pub fn with_cache(mut self, cache: JudgmentCache) -> Self {
        self.cache = Some(cache);
        self
    }

    pub fn variant(&self) -> &JudgeVariant {
        &self.variant
    }

    /// Judge every document of `corpus`.
    ///
    /// Output order equals corpus order regardless of completion order.
    /// When any document still fails after retries, the full record set is
    /// wrapped in [`JudgeError::PartialFailure`] so callers can keep the
    /// successes and report the failures.
    pub fn judge_corpus(&mut self, corpus: &Corpus) -> Result<Vec<JudgeRecord>, JudgeError> {
        // Cache pre-pass: resolve hits, collect misses.
        let mut records: Vec<Option<JudgeRecord>> = Vec::with_capacity(corpus.docs.len());
        let mut misses: Vec<usize> = Vec::new();
        for (idx, doc) in corpus.docs.iter().enumerate() {
            let key = JudgmentCache::key(&self.variant, &self.model, &doc.text);
            let hit = self.cache.as_ref().and_then(|c| c.get(&key)).cloned();
            match hit {
                Some(judgment) => records.push(Some(JudgeRecord {
                    doc_id: doc.id.clone(),
                    judgment: Some(judgment),
                    error: None,
                    retries: 0,
                    from_cache: true,
                })),
                None => {
                    records.push(None);
                    misses.push(idx);
                }
            }
        }

        // Bounded fan-out over the misses; each slot is written exactly once.
        if !misses.is_empty() {
            let slots: Mutex<Vec<(usize, JudgeRecord)>> = Mutex::new(Vec::with_capacity(misses.len()));
            let cursor = AtomicUsize::new(0);
            let workers = self.concurrency.min(misses.len());
            std::thread::scope(|scope| {
                for _ in 0..workers {
                    scope.spawn(|| loop {
                        let next = cursor.fetch_add(1, Ordering::Relaxed);
                        if next >= misses.len() {
                            break;
                        }
                        let doc = &corpus.docs[misses[next]];
                        let record = self.judge_one(&doc.id, &doc.text);
                        slots.lock().unwrap().push((misses[next], record));
                    });
                }
            });
            for (idx, record) in slots.into_inner().unwrap() {
                records[idx] = Some(record);
            }
        }

        let records: Vec<JudgeRecord> = records.into_iter().map(Option::unwrap).collect();

        // Cache post-pass, serialized and in corpus order.
        if let Some(cache) = &mut self.cache {
            for (doc, record) in corpus.docs.iter().zip(&records) {
                if let (Some(judgment), false) = (&record.judgment, record.from_cache) {
                    let key = JudgmentCache::key(&self.variant, &self.model, &doc.text);
                    cache.put(key, judgment.clone())?;
                }
            }
        }

        let failed: Vec<String> = records
            .iter()
            .filter(|r| r.judgment.is_none())
            .map(|r| r.doc_id.clone())
            .collect();
        if failed.is_empty() {
            Ok(records)
        } else {
            let failed_count = failed.len();
            let total = records.len();
            Err(JudgeError::PartialFailure {
                records,
                failed,
                failed_count,
                total,
            })
        }
    }

    fn judge_one(&self, doc_id: &str, text: &str) -> JudgeRecord {
        let request = match build_prompt(
            &self.variant,
            text,
            self.shots.as_deref(),
            &self.templates,
            &self.model,
        ) {
            Ok(req) => req,
            Err(e) => {
                return JudgeRecord {
                    doc_id: doc_id.to_string(),
                    judgment: None,
                    error: Some(e.to_string()),
                    retries: 0,
                    from_cache: false,
                }
            }
        };
        match self.client.complete(&request) {
            Ok((completion, retries)) => match parse_judgment(&self.variant, &completion) {
                Ok(judgment) => JudgeRecord {
                    doc_id: doc_id.to_string(),
                    judgment: Some(judgment),
                    error: None,
                    retries,
                    from_cache: false,
                },
                Err(e) => JudgeRecord {
                    doc_id: doc_id.to_string(),
                    judgment: None,
                    error: Some(e.to_string()),
                    retries,
                    from_cache: false,
                },
            },
            Err(e) => JudgeRecord {
                doc_id: doc_id.to_string(),
                judgment: None,
                error: Some(e.to_string()),
                retries: 0,
                from_cache: false,
            },
        }
    }
}
