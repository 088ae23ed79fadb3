import pytest
from unittest.mock import patch, AsyncMock
from qsymkit.utils.concurrency import async_batch_gather, async_index_wrapper, run_in_workers


@pytest.mark.asyncio
class TestAsyncBatchGather:
    @patch("qsymkit.utils.concurrency.tqdm_asyncio")
    async def test_async_batch_gather_full_batch(self, mock_tqdm_asyncio):
        """Test async_batch_gather with a full batch."""
        coroutines = [AsyncMock() for _ in range(3)]

        mock_tqdm_asyncio.gather = AsyncMock()
        mock_tqdm_asyncio.gather.return_value = ["result1", "result2", "result3"]

        result = await async_batch_gather(coroutines, batch_size=3, description="Test batch")

        assert result == ["result1", "result2", "result3"]
        mock_tqdm_asyncio.gather.assert_called_once_with(
            *coroutines, desc="Test batch 0-3/3", disable=True
        )

    @patch("qsymkit.utils.concurrency.tqdm_asyncio")
    async def test_async_batch_gather_multiple_batches(self, mock_tqdm_asyncio):
        """Test async_batch_gather with multiple batches."""
        coroutines = [AsyncMock() for _ in range(5)]

        mock_tqdm_asyncio.gather = AsyncMock()
        mock_tqdm_asyncio.gather.side_effect = [
            ["result1", "result2"],
            ["result3", "result4"],
            ["result5"],
        ]

        result = await async_batch_gather(coroutines, batch_size=2, description="Test batch")

        assert result == ["result1", "result2", "result3", "result4", "result5"]
        assert mock_tqdm_asyncio.gather.call_count == 3
        mock_tqdm_asyncio.gather.assert_any_call(
            coroutines[4], desc="Test batch 4-5/5", disable=True
        )

    @patch("qsymkit.utils.concurrency.tqdm_asyncio")
    async def test_async_batch_gather_empty(self, mock_tqdm_asyncio):
        """Test async_batch_gather with an empty list of coroutines."""
        result = await async_batch_gather([], batch_size=2)

        assert result == []
        mock_tqdm_asyncio.gather.assert_not_called()


@pytest.mark.asyncio
class TestAsyncIndexWrapper:
    async def test_async_index_wrapper(self):
        """Test that the wrapper pairs the output with its index."""
        mock_func = AsyncMock(return_value="output")

        result = await async_index_wrapper(mock_func, 7, "arg", key="value")

        assert result == (7, "output")
        mock_func.assert_called_once_with("arg", key="value")


class TestRunInWorkers:
    def test_results_keep_item_order(self):
        """Test that results come back in item order."""
        with patch("qsymkit.utils.concurrency.settings") as mock_settings:
            mock_settings.worker_count = 4
            mock_settings.show_progress = False

            assert run_in_workers(lambda x: x * x, range(10)) == [x * x for x in range(10)]

    def test_single_worker_runs_inline(self):
        """Test that one worker skips the thread pool."""
        with patch("qsymkit.utils.concurrency.settings") as mock_settings, patch(
            "qsymkit.utils.concurrency.asyncio.run"
        ) as mock_run:
            mock_settings.worker_count = 1

            assert run_in_workers(str, [1, 2]) == ["1", "2"]
            mock_run.assert_not_called()

    def test_errors_propagate(self):
        """Test that an exception in a worker reaches the caller."""

        def fail(item):
            raise ValueError(f"bad item {item}")

        with patch("qsymkit.utils.concurrency.settings") as mock_settings:
            mock_settings.worker_count = 2
            mock_settings.show_progress = False

            with pytest.raises(ValueError, match="bad item"):
                run_in_workers(fail, [1, 2])

    @pytest.mark.asyncio
    async def test_inside_event_loop_runs_inline(self):
        """Test that a running event loop is not nested."""
        assert run_in_workers(lambda x: x + 1, [1, 2, 3]) == [2, 3, 4]
